#pragma once

#include "jforge/geomstruct/nondeg.hpp"

namespace jforge {

// Certified contact form with cached derived data.
class ContactData {
 public:
  // Throws DomainError when alpha ^ (d alpha)^n vanishes identically or at a sample.
  explicit ContactData(DifferentialForm alpha, Samples samples = {});

  const ChartPtr& chart() const { return alpha_.chart(); }
  int dim() const { return alpha_.dim(); }
  int n() const { return (dim() - 1) / 2; }
  const DifferentialForm& alpha() const { return alpha_; }
  const DifferentialForm& d_alpha() const { return d_alpha_; }
  const MultiVectorField& reeb() const { return reeb_; }
  const ContactReport& report() const { return report_; }
  // Matrix of d alpha, and inverse of the matrix of phi (columns act on covector components).
  const Mat<ScalarField>& d_alpha_matrix() const { return W_; }
  const Mat<ScalarField>& phi_inverse_matrix() const { return phi_inv_; }

 private:
  DifferentialForm alpha_;
  DifferentialForm d_alpha_;
  MultiVectorField reeb_;
  ContactReport report_;
  Mat<ScalarField> W_;
  Mat<ScalarField> phi_inv_;
};

// alpha(R) = 1, i_R d alpha = 0. Throws SingularSystem.
MultiVectorField reeb_field(const DifferentialForm& alpha);

// phi(X) = i_X d alpha + alpha(X) alpha
DifferentialForm musical_phi(const ContactData& C, const MultiVectorField& X);
MultiVectorField phi_inverse(const ContactData& C, const DifferentialForm& beta);

// alpha(X_H) = H, i_{X_H} d alpha = -dH + dH(R) alpha
MultiVectorField contact_hamiltonian(const ContactData& C, const ScalarField& H);

// X - alpha(X) R, the ker alpha component.
MultiVectorField horizontal_part(const ContactData& C, const MultiVectorField& X);

// Matrix-vector product over the field.
Vec<ScalarField> mat_vec(const Mat<ScalarField>& M, const Vec<ScalarField>& v);
Mat<ScalarField> mat_mul(const Mat<ScalarField>& A, const Mat<ScalarField>& B);

}  // namespace jforge
