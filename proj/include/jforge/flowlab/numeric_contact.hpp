#pragma once

#include <vector>

#include "jforge/flowlab/fields.hpp"
#include "jforge/geomstruct/contact.hpp"

namespace jforge {

// Pointwise long double evaluation of a certified contact form.
class NumericContact {
 public:
  explicit NumericContact(const ContactData& C);

  const ChartPtr& chart() const { return chart_; }
  int dim() const { return dim_; }
  RVec alpha(const RVec& u) const;
  RMat d_alpha(const RVec& u) const;  // W(i,j) = coefficient of dx_i ^ dx_j
  RVec reeb(const RVec& u) const;
  // Solves phi(X) = -dH + (dH(R) + H) alpha at u. Throws SingularSystem.
  RVec hamiltonian_field(const RVec& u, Real H, const RVec& dH) const;
  // Same, reusing already evaluated alpha, W and R.
  static RVec hamiltonian_field(const RVec& a, const RMat& W, const RVec& R, Real H, const RVec& dH);

 private:
  ChartPtr chart_;
  int dim_;
  std::vector<CompiledField> a_, R_;
  std::vector<std::pair<std::pair<int, int>, CompiledField>> W_;  // nonzero upper entries
};

// Top coefficient of a ^ omega^m in dimension 2m+1, omega with matrix B.
Real contact_top(const RVec& a, const RMat& B);

// Pullback of a covector by a linear map: (J^T a)_j = sum_i a_i J(i,j).
RVec pull_covector(const RVec& a, const RMat& J);

}  // namespace jforge
