#include "jforge/flowlab/numeric_contact.hpp"

#include <Eigen/LU>

#include "jforge/extcalc/calculus.hpp"
#include "jforge/geomstruct/linsolve.hpp"

namespace jforge {

NumericContact::NumericContact(const ContactData& C) : chart_(C.chart()), dim_(C.dim()) {
  Vec<ScalarField> a = components(C.alpha()), R = components(C.reeb());
  for (int i = 0; i < dim_; ++i) {
    a_.emplace_back(a(i));
    R_.emplace_back(R(i));
  }
  const Mat<ScalarField>& W = C.d_alpha_matrix();
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (!W(i, j).is_zero()) W_.push_back({{i, j}, CompiledField(W(i, j))});
}

RVec NumericContact::alpha(const RVec& u) const {
  RVec r(dim_);
  for (int i = 0; i < dim_; ++i) r(i) = a_[static_cast<std::size_t>(i)](u);
  return r;
}

RMat NumericContact::d_alpha(const RVec& u) const {
  RMat W = RMat::Zero(dim_, dim_);
  for (const auto& [ij, f] : W_) {
    W(ij.first, ij.second) = f(u);
    W(ij.second, ij.first) = -W(ij.first, ij.second);
  }
  return W;
}

RVec NumericContact::reeb(const RVec& u) const {
  RVec r(dim_);
  for (int i = 0; i < dim_; ++i) r(i) = R_[static_cast<std::size_t>(i)](u);
  return r;
}

RVec NumericContact::hamiltonian_field(const RVec& u, Real H, const RVec& dH) const {
  return hamiltonian_field(alpha(u), d_alpha(u), reeb(u), H, dH);
}

RVec NumericContact::hamiltonian_field(const RVec& a, const RMat& W, const RVec& R, Real H, const RVec& dH) {
  const RVec beta = -dH + (dH.dot(R) + H) * a;
  if (beta.isZero(0)) return RVec::Zero(a.size());
  const RMat M = W.transpose() + a * a.transpose();
  Eigen::FullPivLU<RMat> lu(M);
  if (!lu.isInvertible()) throw SingularSystem("contact Hamiltonian solve is singular");
  return lu.solve(beta);
}

Real contact_top(const RVec& a, const RMat& B) {
  const int n = static_cast<int>(a.size());
  if (n % 2 == 0 || B.rows() != n || B.cols() != n) throw DomainError("contact_top needs odd dimension");
  Real fact = 1;
  for (int k = 2; k <= (n - 1) / 2; ++k) fact *= k;
  Real acc = 0;
  for (int i = 0; i < n; ++i) {
    if (a(i) == 0) continue;
    RMat minor(n - 1, n - 1);
    for (int r = 0, rr = 0; r < n; ++r) {
      if (r == i) continue;
      for (int c = 0, cc = 0; c < n; ++c) {
        if (c == i) continue;
        minor(rr, cc++) = B(r, c);
      }
      ++rr;
    }
    const Real term = a(i) * pfaffian(minor);
    acc += (i % 2 == 0) ? term : -term;
  }
  return fact * acc;
}

RVec pull_covector(const RVec& a, const RMat& J) { return J.transpose() * a; }

}  // namespace jforge
