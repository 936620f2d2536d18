#include "jforge/extcalc/calculus.hpp"

namespace jforge {

int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple* out) {
  out->clear();
  out->reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  int inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out->push_back(a[i++]);
    } else {
      inversions += static_cast<int>(a.size() - i);
      out->push_back(b[j++]);
    }
  }
  while (i < a.size()) out->push_back(a[i++]);
  while (j < b.size()) out->push_back(b[j++]);
  return (inversions & 1) ? -1 : 1;
}

DifferentialForm dx(const ChartPtr& chart, int i) { return DifferentialForm::basis(chart, {i}); }

MultiVectorField partial_vector(const ChartPtr& chart, int i) {
  return MultiVectorField::basis(chart, {i});
}

DifferentialForm as_form(const ChartPtr& chart, const ScalarField& f) {
  return DifferentialForm::scalar(chart, f);
}

MultiVectorField as_multivector(const ChartPtr& chart, const ScalarField& f) {
  return MultiVectorField::scalar(chart, f);
}

namespace {
template <class G>
Vec<ScalarField> components_of(const G& g) {
  if (g.degree() != 1) throw DomainError("expected a degree-1 element");
  Vec<ScalarField> v(g.dim());
  for (int i = 0; i < g.dim(); ++i) v(i) = ScalarField::constant(g.chart(), 0);
  for (const auto& [k, c] : g.terms()) v(k[0]) = c;
  return v;
}

template <class G>
G from_components(const ChartPtr& chart, const Vec<ScalarField>& c) {
  if (c.size() != chart->dim()) throw DomainError("component count does not match chart dimension");
  G g(chart, 1);
  for (int i = 0; i < c.size(); ++i) g.add_sorted({i}, c(i));
  return g;
}

template <class G>
Mat<ScalarField> antisym(const G& w) {
  if (w.degree() != 2) throw DomainError("expected a degree-2 element");
  const int n = w.dim();
  Mat<ScalarField> W(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) W(i, j) = ScalarField::constant(w.chart(), 0);
  for (const auto& [k, c] : w.terms()) {
    W(k[0], k[1]) = c;
    W(k[1], k[0]) = -c;
  }
  return W;
}
}  // namespace

Vec<ScalarField> components(const MultiVectorField& X) { return components_of(X); }
Vec<ScalarField> components(const DifferentialForm& a) { return components_of(a); }
MultiVectorField vector_from(const ChartPtr& chart, const Vec<ScalarField>& c) {
  return from_components<MultiVectorField>(chart, c);
}
DifferentialForm covector_from(const ChartPtr& chart, const Vec<ScalarField>& c) {
  return from_components<DifferentialForm>(chart, c);
}
Mat<ScalarField> antisymmetric_matrix(const DifferentialForm& w) { return antisym(w); }
Mat<ScalarField> antisymmetric_matrix(const MultiVectorField& w) { return antisym(w); }

DifferentialForm exterior_d(const DifferentialForm& w) {
  DifferentialForm r = w.zero_like(w.degree() + 1);
  IndexTuple merged;
  for (const auto& [k, f] : w.terms()) {
    if (f.is_constant()) continue;
    for (int i = 0; i < w.dim(); ++i) {
      int s = merge_sign({i}, k, &merged);
      if (s == 0) continue;
      ScalarField df = f.partial(i);
      if (df.is_zero()) continue;
      r.add_sorted(merged, s > 0 ? df : -df);
    }
  }
  return r;
}

DifferentialForm gradient(const ScalarField& f, const ChartPtr& chart) {
  return exterior_d(as_form(chart, f));
}

DifferentialForm interior_product(const MultiVectorField& X, const DifferentialForm& w) {
  if (X.degree() != 1) throw DomainError("interior product needs a vector field");
  if (w.degree() == 0) throw DomainError("interior product of a 0-form");
  if (!compatible(X.chart(), w.chart())) throw ChartMismatch();
  DifferentialForm r = w.zero_like(w.degree() - 1);
  for (const auto& [k, f] : w.terms())
    for (std::size_t p = 0; p < k.size(); ++p) {
      const ScalarField xi = X.coefficient({k[p]});
      if (xi.is_zero()) continue;
      IndexTuple rest = k;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      ScalarField c = xi * f;
      r.add_sorted(rest, (p % 2 == 0) ? c : -c);
    }
  return r;
}

ScalarField directional(const MultiVectorField& X, const ScalarField& f) {
  if (X.degree() != 1) throw DomainError("expected a vector field");
  ScalarField acc = ScalarField::constant(X.chart(), 0);
  for (const auto& [k, c] : X.terms()) acc += c * f.partial(k[0]);
  return acc;
}

ScalarField pair(const DifferentialForm& alpha, const MultiVectorField& X) {
  if (alpha.degree() != 1 || X.degree() != 1) throw DomainError("pairing needs a 1-form and a vector field");
  if (!compatible(alpha.chart(), X.chart())) throw ChartMismatch();
  ScalarField acc = ScalarField::constant(X.chart(), 0);
  for (const auto& [k, c] : X.terms()) acc += c * alpha.coefficient(k);
  return acc;
}

DifferentialForm lie_derivative(const MultiVectorField& X, const DifferentialForm& w) {
  if (w.degree() == 0) return as_form(w.chart(), directional(X, as_scalar(w)));
  return interior_product(X, exterior_d(w)) + exterior_d(interior_product(X, w));
}

DifferentialForm lichnerowicz_d(const DifferentialForm& theta, const DifferentialForm& w) {
  if (theta.degree() != 1) throw DomainError("Lee form must have degree 1");
  return exterior_d(w) + wedge(theta, w);
}

MultiVectorField odd_derivative(const MultiVectorField& A, int i) {
  if (A.degree() == 0) return A.zero_like(0);
  MultiVectorField r = A.zero_like(A.degree() - 1);
  for (const auto& [k, c] : A.terms()) {
    auto it = std::find(k.begin(), k.end(), i);
    if (it == k.end()) continue;
    std::size_t p = static_cast<std::size_t>(it - k.begin());
    IndexTuple rest = k;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
    // zeta_i travels past the k.size()-1-p factors behind it.
    bool odd = ((k.size() - 1 - p) % 2) == 1;
    r.add_sorted(rest, odd ? -c : c);
  }
  return r;
}

MultiVectorField coordinate_derivative(const MultiVectorField& A, int i) {
  return A.map_coefficients([i](const ScalarField& c) { return c.partial(i); });
}

MultiVectorField schouten_bracket(const MultiVectorField& A, const MultiVectorField& B) {
  if (!A.same_space(B)) throw ChartMismatch();
  const int p = A.degree(), q = B.degree();
  if (p + q == 0) return A.zero_like(0);
  MultiVectorField r = A.zero_like(p + q - 1);
  const bool minus = ((p - 1) * (q - 1)) % 2 == 0;
  for (int i = 0; i < A.dim(); ++i) {
    if (p > 0) {
      MultiVectorField da = odd_derivative(A, i);
      if (!da.is_zero()) {
        MultiVectorField db = coordinate_derivative(B, i);
        if (!db.is_zero()) r += wedge(da, db);
      }
    }
    if (q > 0) {
      MultiVectorField db = odd_derivative(B, i);
      if (!db.is_zero()) {
        MultiVectorField ca = coordinate_derivative(A, i);
        if (!ca.is_zero()) {
          MultiVectorField t = wedge(db, ca);
          if (minus) r -= t;
          else r += t;
        }
      }
    }
  }
  return r;
}

ScalarField mv_pairing(const MultiVectorField& Lambda, const DifferentialForm& beta,
                       const DifferentialForm& gamma) {
  if (Lambda.degree() != 2 || beta.degree() != 1 || gamma.degree() != 1)
    throw DomainError("pairing needs a bivector and two 1-forms");
  if (!compatible(Lambda.chart(), beta.chart()) || !compatible(Lambda.chart(), gamma.chart()))
    throw ChartMismatch();
  ScalarField acc = ScalarField::constant(Lambda.chart(), 0);
  for (const auto& [k, c] : Lambda.terms()) {
    const ScalarField bi = beta.coefficient({k[0]}), bj = beta.coefficient({k[1]});
    const ScalarField gi = gamma.coefficient({k[0]}), gj = gamma.coefficient({k[1]});
    ScalarField m = bi * gj - bj * gi;
    if (!m.is_zero()) acc += c * m;
  }
  return acc;
}

MultiVectorField sharp(const MultiVectorField& Lambda, const DifferentialForm& beta) {
  if (Lambda.degree() != 2 || beta.degree() != 1) throw DomainError("sharp needs a bivector and a 1-form");
  if (!compatible(Lambda.chart(), beta.chart())) throw ChartMismatch();
  MultiVectorField r = Lambda.zero_like(1);
  for (const auto& [k, c] : Lambda.terms()) {
    // Lambda(beta, dx_j) picks beta_i c for (i,j) and -beta_j c for (j,i).
    const ScalarField bi = beta.coefficient({k[0]}), bj = beta.coefficient({k[1]});
    if (!bi.is_zero()) r.add_sorted({k[1]}, c * bi);
    if (!bj.is_zero()) r.add_sorted({k[0]}, -(c * bj));
  }
  return r;
}

}  // namespace jforge
