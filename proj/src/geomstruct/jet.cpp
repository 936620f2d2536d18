#include "jforge/geomstruct/jet.hpp"

namespace jforge {

JetPoint<ScalarField> one_jet(const DifferentialForm& alpha) {
  const int n = alpha.dim();
  JetPoint<ScalarField> J{components(alpha), Mat<ScalarField>(n, n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) J.A(i, j) = J.a(i).partial(j);
  return J;
}

JetPoint<Rational> jet_at(const DifferentialForm& alpha, const Point<Rational>& p) {
  JetPoint<ScalarField> J = one_jet(alpha);
  const int n = alpha.dim();
  JetPoint<Rational> r{Vec<Rational>(n), Mat<Rational>(n, n)};
  for (int i = 0; i < n; ++i) {
    r.a(i) = J.a(i).evaluate<Rational>(p);
    for (int j = 0; j < n; ++j) r.A(i, j) = J.A(i, j).evaluate<Rational>(p);
  }
  return r;
}

Vec<Rational> covector_at(const DifferentialForm& theta, const Point<Rational>& p) {
  Vec<ScalarField> c = components(theta);
  Vec<Rational> r(c.size());
  for (int i = 0; i < c.size(); ++i) r(i) = c(i).evaluate<Rational>(p);
  return r;
}

}  // namespace jforge
