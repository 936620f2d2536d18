#pragma once

#include <utility>

#include "jforge/extcalc/calculus.hpp"
#include "jforge/geomstruct/linsolve.hpp"

namespace jforge {

// 1-jet of a 1-form at a point: a_i = alpha_i, A(i,j) = a_ij = d_j alpha_i.
template <class S>
struct JetPoint {
  Vec<S> a;
  Mat<S> A;
};

namespace detail {
template <class S>
void check_jet(const JetPoint<S>& J) {
  if (J.A.rows() != J.A.cols()) throw DomainError("jet matrix must be square");
  if (J.A.rows() != J.a.size()) throw DomainError("jet dimension mismatch");
}
}  // namespace detail

// Coefficients b_ij (i<j) of d_theta alpha, returned as an antisymmetric matrix.
template <class S>
Mat<S> jet_D_theta(const Vec<S>& theta, const JetPoint<S>& J) {
  detail::check_jet(J);
  const int n = static_cast<int>(J.a.size());
  if (theta.size() != n) throw DomainError("theta dimension mismatch");
  Mat<S> b(n, n);
  for (int i = 0; i < n; ++i) {
    b(i, i) = S(0);
    for (int j = i + 1; j < n; ++j) {
      b(i, j) = (J.A(j, i) - J.A(i, j)) + (theta(i) * J.a(j) - J.a(i) * theta(j));
      b(j, i) = -b(i, j);
    }
  }
  return b;
}

// (alpha, d alpha) at the point.
template <class S>
std::pair<Vec<S>, Mat<S>> jet_D_bar(const JetPoint<S>& J) {
  detail::check_jet(J);
  Vec<S> zero(J.a.size());
  for (int i = 0; i < zero.size(); ++i) zero(i) = S(0);
  return {J.a, jet_D_theta(zero, J)};
}

// Right inverse: a = 0, A antisymmetric with a_ij = -b_ij / 2.
template <class S>
JetPoint<S> jet_lift(const Mat<S>& b, const Vec<S>& theta) {
  const int n = static_cast<int>(b.rows());
  if (b.cols() != n || theta.size() != n) throw DomainError("jet dimension mismatch");
  JetPoint<S> J{Vec<S>(n), Mat<S>(n, n)};
  for (int i = 0; i < n; ++i) {
    J.a(i) = S(0);
    if (!is_zero_exact(b(i, i))) throw DomainError("matrix is not antisymmetric");
    J.A(i, i) = S(0);
    for (int j = i + 1; j < n; ++j) {
      if (!is_zero_exact(b(i, j) + b(j, i))) throw DomainError("matrix is not antisymmetric");
      J.A(i, j) = -b(i, j) / S(2);
      J.A(j, i) = b(i, j) / S(2);
    }
  }
  return J;
}

JetPoint<ScalarField> one_jet(const DifferentialForm& alpha);
JetPoint<Rational> jet_at(const DifferentialForm& alpha, const Point<Rational>& p);
Vec<Rational> covector_at(const DifferentialForm& theta, const Point<Rational>& p);

}  // namespace jforge
