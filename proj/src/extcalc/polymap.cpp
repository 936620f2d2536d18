#include "jforge/extcalc/polymap.hpp"

#include "jforge/extcalc/calculus.hpp"

namespace jforge {

PolyMap::PolyMap(ChartPtr source, ChartPtr target, std::vector<ScalarField> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (!source_ || !target_) throw DomainError("map needs source and target charts");
  if (static_cast<int>(components_.size()) != target_->dim())
    throw DomainError("component count must equal target dimension");
  for (auto& c : components_) {
    if (!compatible(c.chart(), source_)) throw ChartMismatch();
    c = c.with_chart(source_);
  }
}

PolyMap PolyMap::identity(const ChartPtr& chart) {
  std::vector<ScalarField> c;
  for (int i = 0; i < chart->dim(); ++i) c.push_back(ScalarField::coordinate(chart, i));
  return PolyMap(chart, chart, std::move(c));
}

ScalarField PolyMap::substitute(const ScalarField& f) const {
  if (!compatible(f.chart(), target_)) throw ChartMismatch();
  if (f.is_constant()) return ScalarField::constant(source_, f.constant_value());
  std::span<const ScalarField> xs(components_.data(), components_.size());
  ScalarField n = f.num().evaluate<ScalarField>(xs).with_chart(source_);
  ScalarField d = f.den().evaluate<ScalarField>(xs).with_chart(source_);
  if (d.is_zero()) throw PoleError();
  return n / d;
}

Mat<ScalarField> PolyMap::jacobian() const {
  const int m = target_->dim(), n = source_->dim();
  Mat<ScalarField> J(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) J(i, j) = components_[static_cast<std::size_t>(i)].partial(j);
  return J;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (!compatible(outer.source(), inner.target())) throw ChartMismatch();
  std::vector<ScalarField> c;
  for (const auto& f : outer.components()) c.push_back(inner.substitute(f));
  return PolyMap(inner.source(), outer.target(), std::move(c));
}

DifferentialForm pullback(const PolyMap& phi, const DifferentialForm& w) {
  if (!compatible(w.chart(), phi.target())) throw ChartMismatch();
  const ChartPtr& src = phi.source();
  DifferentialForm r(src, w.degree());
  if (w.degree() > src->dim()) return r;
  Mat<ScalarField> J = phi.jacobian();
  std::vector<DifferentialForm> dphi;
  for (int k = 0; k < phi.target()->dim(); ++k) {
    DifferentialForm d(src, 1);
    for (int j = 0; j < src->dim(); ++j) d.add_sorted({j}, J(k, j));
    dphi.push_back(std::move(d));
  }
  for (const auto& [idx, f] : w.terms()) {
    DifferentialForm term = as_form(src, phi.substitute(f));
    for (int k : idx) {
      term = wedge(term, dphi[static_cast<std::size_t>(k)]);
      if (term.is_zero()) break;
    }
    if (!term.is_zero()) r += term;
  }
  return r;
}

MultiVectorField pushforward(const PolyMap& psi, const PolyMap& psi_inv, const MultiVectorField& A) {
  if (!compatible(A.chart(), psi.source())) throw ChartMismatch();
  if (!compatible(psi_inv.source(), psi.target()) || !compatible(psi_inv.target(), psi.source()))
    throw ChartMismatch();
  const ChartPtr& tgt = psi.target();
  Mat<ScalarField> J = psi.jacobian();
  std::vector<MultiVectorField> columns;
  for (int j = 0; j < psi.source()->dim(); ++j) {
    MultiVectorField v(tgt, 1);
    for (int k = 0; k < tgt->dim(); ++k) v.add_sorted({k}, psi_inv.substitute(J(k, j)));
    columns.push_back(std::move(v));
  }
  MultiVectorField r(tgt, A.degree());
  for (const auto& [idx, a] : A.terms()) {
    MultiVectorField term = as_multivector(tgt, psi_inv.substitute(a));
    for (int j : idx) term = wedge(term, columns[static_cast<std::size_t>(j)]);
    if (!term.is_zero()) r += term;
  }
  return r;
}

}  // namespace jforge
