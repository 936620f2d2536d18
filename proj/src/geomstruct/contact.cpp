#include "jforge/geomstruct/contact.hpp"

#include "jforge/geomstruct/linsolve.hpp"

namespace jforge {

Vec<ScalarField> mat_vec(const Mat<ScalarField>& M, const Vec<ScalarField>& v) {
  Vec<ScalarField> r(M.rows());
  for (int i = 0; i < M.rows(); ++i) {
    ScalarField acc;
    for (int j = 0; j < M.cols(); ++j)
      if (!M(i, j).is_zero() && !v(j).is_zero()) acc += M(i, j) * v(j);
    r(i) = acc;
  }
  return r;
}

Mat<ScalarField> mat_mul(const Mat<ScalarField>& A, const Mat<ScalarField>& B) {
  Mat<ScalarField> r(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j) {
      ScalarField acc;
      for (int k = 0; k < A.cols(); ++k)
        if (!A(i, k).is_zero() && !B(k, j).is_zero()) acc += A(i, k) * B(k, j);
      r(i, j) = acc;
    }
  return r;
}

namespace {

Mat<ScalarField> phi_matrix(const Vec<ScalarField>& a, const Mat<ScalarField>& W) {
  const int n = static_cast<int>(a.size());
  Mat<ScalarField> M(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) M(j, i) = W(i, j) + a(i) * a(j);
  return M;
}

}  // namespace

MultiVectorField reeb_field(const DifferentialForm& alpha) {
  if (alpha.degree() != 1) throw DomainError("Reeb field needs a 1-form");
  if (alpha.dim() % 2 == 0) throw DomainError("contact forms need odd dimension");
  const int n = alpha.dim();
  Vec<ScalarField> a = components(alpha);
  Mat<ScalarField> W = antisymmetric_matrix(exterior_d(alpha));
  Mat<ScalarField> A(n + 1, n);
  Vec<ScalarField> b(n + 1);
  for (int i = 0; i < n; ++i) A(0, i) = a(i);
  b(0) = ScalarField(1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) A(j + 1, i) = W(i, j);
    b(j + 1) = ScalarField(0);
  }
  return vector_from(alpha.chart(), solve_unique(A, b, "Reeb field"));
}

ContactData::ContactData(DifferentialForm alpha, Samples samples)
    : alpha_(std::move(alpha)), report_(is_contact(alpha_, samples)) {
  if (report_.report.identically_zero) throw DomainError("alpha ^ (d alpha)^n vanishes identically");
  if (!report_.report.sample_failures.empty()) throw DomainError("alpha ^ (d alpha)^n vanishes at a sample");
  d_alpha_ = exterior_d(alpha_);
  reeb_ = reeb_field(alpha_);
  W_ = antisymmetric_matrix(d_alpha_);
  phi_inv_ = inverse_exact(phi_matrix(components(alpha_), W_), "contact isomorphism");
}

DifferentialForm musical_phi(const ContactData& C, const MultiVectorField& X) {
  DifferentialForm r = interior_product(X, C.d_alpha());
  ScalarField s = pair(C.alpha(), X);
  if (!s.is_zero()) r += s * C.alpha();
  return r;
}

MultiVectorField phi_inverse(const ContactData& C, const DifferentialForm& beta) {
  if (!compatible(beta.chart(), C.chart())) throw ChartMismatch();
  if (beta.is_zero()) return MultiVectorField(C.chart(), 1);
  return vector_from(C.chart(), mat_vec(C.phi_inverse_matrix(), components(beta)));
}

MultiVectorField contact_hamiltonian(const ContactData& C, const ScalarField& H) {
  DifferentialForm dH = gradient(H, C.chart());
  DifferentialForm rhs = -dH;
  ScalarField s = (dH.is_zero() ? ScalarField() : pair(dH, C.reeb())) + H;
  if (!s.is_zero()) rhs += s * C.alpha();
  return phi_inverse(C, rhs);
}

MultiVectorField horizontal_part(const ContactData& C, const MultiVectorField& X) {
  ScalarField s = pair(C.alpha(), X);
  return s.is_zero() ? X : X - s * C.reeb();
}

}  // namespace jforge
