#pragma once

#include <optional>

#include "jforge/extcalc/graded.hpp"

namespace jforge {

// Basis elements and coordinate helpers.
DifferentialForm dx(const ChartPtr& chart, int i);
MultiVectorField partial_vector(const ChartPtr& chart, int i);
DifferentialForm as_form(const ChartPtr& chart, const ScalarField& f);
MultiVectorField as_multivector(const ChartPtr& chart, const ScalarField& f);
// Degree-0 element to its scalar.
template <class Tag>
ScalarField as_scalar(const BasicGraded<Tag, ScalarField>& g) {
  if (g.degree() != 0) throw DomainError("expected a degree-0 element");
  return g.coefficient({});
}

// Vector field components X^i and 1-form components a_i as dense vectors.
Vec<ScalarField> components(const MultiVectorField& X);
Vec<ScalarField> components(const DifferentialForm& a);
MultiVectorField vector_from(const ChartPtr& chart, const Vec<ScalarField>& c);
DifferentialForm covector_from(const ChartPtr& chart, const Vec<ScalarField>& c);
// Antisymmetric matrix W_ij of a 2-form or bivector (W_ij = coefficient for i<j).
Mat<ScalarField> antisymmetric_matrix(const DifferentialForm& w);
Mat<ScalarField> antisymmetric_matrix(const MultiVectorField& w);

DifferentialForm exterior_d(const DifferentialForm& w);
DifferentialForm gradient(const ScalarField& f, const ChartPtr& chart);
DifferentialForm interior_product(const MultiVectorField& X, const DifferentialForm& w);
DifferentialForm lie_derivative(const MultiVectorField& X, const DifferentialForm& w);
DifferentialForm lichnerowicz_d(const DifferentialForm& theta, const DifferentialForm& w);

// X(f)
ScalarField directional(const MultiVectorField& X, const ScalarField& f);
// alpha(X) for a 1-form and a vector field.
ScalarField pair(const DifferentialForm& alpha, const MultiVectorField& X);

// Odd derivative with the Koszul sign of moving zeta_i to the back.
MultiVectorField odd_derivative(const MultiVectorField& A, int i);
MultiVectorField coordinate_derivative(const MultiVectorField& A, int i);
MultiVectorField schouten_bracket(const MultiVectorField& A, const MultiVectorField& B);

// Lambda^#(beta) and Lambda(beta, gamma).
MultiVectorField sharp(const MultiVectorField& Lambda, const DifferentialForm& beta);
ScalarField mv_pairing(const MultiVectorField& Lambda, const DifferentialForm& beta,
                       const DifferentialForm& gamma);

}  // namespace jforge
