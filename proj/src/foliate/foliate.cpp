#include "jforge/foliate/foliate.hpp"

#include <map>

#include "jforge/extcalc/grammar.hpp"
#include "jforge/geomstruct/linsolve.hpp"

namespace jforge {

ProductChart::ProductChart(std::vector<std::string> transverse, std::vector<std::string> leaf)
    : q_(static_cast<int>(transverse.size())) {
  std::vector<std::string> all = std::move(transverse);
  all.insert(all.end(), leaf.begin(), leaf.end());
  chart_ = make_chart(std::move(all));  // rejects shared names
}

IndexTuple ProductChart::leaf_top() const {
  IndexTuple t;
  for (int i = q_; i < dim(); ++i) t.push_back(i);
  return t;
}

ProductChartPtr make_product_chart(std::vector<std::string> transverse, std::vector<std::string> leaf) {
  return std::make_shared<const ProductChart>(std::move(transverse), std::move(leaf));
}

namespace {
bool leaf_only(const ProductChart& pc, const IndexTuple& k) {
  return k.empty() || pc.is_leaf_index(k.front());  // tuples are increasing
}
void same_product(const FoliatedForm& a, const FoliatedForm& b) {
  if (!(*a.product() == *b.product())) throw ChartMismatch();
}
}  // namespace

FoliatedForm::FoliatedForm(ProductChartPtr pc, int degree) : pc_(std::move(pc)), w_(pc_->chart(), degree) {}

FoliatedForm::FoliatedForm(ProductChartPtr pc, DifferentialForm w) : pc_(std::move(pc)), w_(std::move(w)) {
  if (!compatible(w_.chart(), pc_->chart()) || w_.dim() != pc_->dim()) throw ChartMismatch();
  for (const auto& [k, c] : w_.terms())
    if (!leaf_only(*pc_, k)) throw DomainError("foliated form contains a transverse differential");
}

FoliatedForm operator+(const FoliatedForm& a, const FoliatedForm& b) {
  same_product(a, b);
  return {a.pc_, a.w_ + b.w_, FoliatedForm::Trusted{}};
}

FoliatedForm operator-(const FoliatedForm& a, const FoliatedForm& b) {
  same_product(a, b);
  return {a.pc_, a.w_ - b.w_, FoliatedForm::Trusted{}};
}

FoliatedForm wedge(const FoliatedForm& a, const FoliatedForm& b) {
  same_product(a, b);
  return FoliatedForm(a.product(), wedge(a.form(), b.form()));
}

FoliatedForm parse_foliated(const std::string& text, const ProductChartPtr& pc, int zero_degree) {
  return FoliatedForm(pc, parse_form(text, pc->chart(), nullptr, zero_degree));
}

FoliatedForm leaf_restrict(const ProductChartPtr& pc, const DifferentialForm& w) {
  if (!compatible(w.chart(), pc->chart())) throw ChartMismatch();
  DifferentialForm r = w.zero_like(w.degree());
  for (const auto& [k, c] : w.terms())
    if (leaf_only(*pc, k)) r.add_sorted(k, c);
  return {pc, std::move(r), FoliatedForm::Trusted{}};
}

FoliatedForm d_F(const FoliatedForm& w) { return leaf_restrict(w.product(), exterior_d(w.form())); }

ScalarField leaf_top_coefficient(const FoliatedForm& w) {
  if (w.degree() != w.product()->leaf_dim() && !w.is_zero()) throw DomainError("not a leaf-top-degree form");
  return w.form().coefficient(w.product()->leaf_top());
}

const char* to_string(FoliatedClassification::Kind k) {
  switch (k) {
    case FoliatedClassification::Kind::FoliatedSymplectic: return "foliated_symplectic";
    case FoliatedClassification::Kind::FoliatedLCS: return "foliated_lcs";
    case FoliatedClassification::Kind::FoliatedContact: return "foliated_contact";
    case FoliatedClassification::Kind::AlmostContact: return "almost_contact";
    case FoliatedClassification::Kind::None: return "none";
  }
  return "?";
}

namespace {

FoliatedForm power(const FoliatedForm& w, int m) {
  FoliatedForm r(w.product(), DifferentialForm::scalar(w.product()->chart(), ScalarField(1)));
  for (int i = 0; i < m; ++i) r = wedge(r, w);
  return r;
}

// Leafwise Lee form: theta with d_F omega + theta ^ omega = 0.
std::optional<FoliatedForm> foliated_lee_form(const FoliatedForm& omega) {
  const ProductChart& pc = *omega.product();
  FoliatedForm dw = d_F(omega);
  std::vector<int> unknowns;
  std::vector<DifferentialForm> cols;
  std::map<IndexTuple, int> row_of;
  std::vector<IndexTuple> rows;
  auto add_rows = [&](const DifferentialForm& f) {
    for (const auto& [k, v] : f.terms())
      if (row_of.emplace(k, static_cast<int>(rows.size())).second) rows.push_back(k);
  };
  for (int i = pc.q(); i < pc.dim(); ++i) {
    unknowns.push_back(i);
    cols.push_back(wedge(dx(pc.chart(), i), omega.form()));
    add_rows(cols.back());
  }
  add_rows(dw.form());
  FoliatedForm theta(omega.product(), 1);
  if (rows.empty()) return theta;
  const int m = static_cast<int>(rows.size()), n = static_cast<int>(unknowns.size());
  Mat<ScalarField> A(m, n);
  Vec<ScalarField> b(m);
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) A(r, j) = cols[static_cast<std::size_t>(j)].coefficient(rows[static_cast<std::size_t>(r)]);
    b(r) = -dw.form().coefficient(rows[static_cast<std::size_t>(r)]);
  }
  LinearSolution<ScalarField> s = solve_exact(A, b);
  if (s.status == LinearSolution<ScalarField>::Status::Inconsistent) return std::nullopt;
  if (!s.unique()) throw SingularSystem("leafwise Lee form is not unique");
  DifferentialForm t(pc.chart(), 1);
  for (int j = 0; j < n; ++j) t.add_sorted({unknowns[static_cast<std::size_t>(j)]}, s.x(j));
  return FoliatedForm(omega.product(), t);
}

}  // namespace

FoliatedClassification foliated_classify(const std::optional<FoliatedForm>& alpha,
                                         const std::optional<FoliatedForm>& omega, Samples samples) {
  using Kind = FoliatedClassification::Kind;
  if (!alpha && !omega) throw DomainError("nothing to classify");
  const ProductChartPtr& pc = alpha ? alpha->product() : omega->product();
  if (alpha && omega) same_product(*alpha, *omega);
  if (alpha && alpha->degree() != 1 && !alpha->is_zero()) throw DomainError("expected a foliated 1-form");
  if (omega && omega->degree() != 2 && !omega->is_zero()) throw DomainError("expected a foliated 2-form");
  const int leaf = pc->leaf_dim();
  FoliatedClassification out;

  if (alpha) {
    if (leaf % 2 == 0) throw DomainError("contact structures need odd leaf dimension");
    const int k = (leaf - 1) / 2;
    FoliatedForm beta = omega ? *omega : d_F(*alpha);
    if (beta.is_zero()) beta = FoliatedForm(pc, 2);
    FoliatedForm top = wedge(*alpha, power(beta, k));
    out.report = report_from_top(top.is_zero() ? ScalarField() : leaf_top_coefficient(top), samples);
    if (!out.report.nondegenerate()) return out;
    out.kind = (!omega || *omega == d_F(*alpha)) ? Kind::FoliatedContact : Kind::AlmostContact;
    return out;
  }

  if (leaf % 2) throw DomainError("symplectic structures need even leaf dimension");
  FoliatedForm top = power(*omega, leaf / 2);
  out.report = report_from_top(top.is_zero() ? ScalarField() : leaf_top_coefficient(top), samples);
  if (!out.report.nondegenerate()) return out;
  if (d_F(*omega).is_zero()) {
    out.kind = Kind::FoliatedSymplectic;
    return out;
  }
  std::optional<FoliatedForm> theta = foliated_lee_form(*omega);
  if (theta && d_F(*theta).is_zero()) {
    out.kind = Kind::FoliatedLCS;
    out.theta = std::move(theta);
  }
  return out;
}

}  // namespace jforge
