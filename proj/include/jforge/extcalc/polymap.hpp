#pragma once

#include <vector>

#include "jforge/extcalc/graded.hpp"

namespace jforge {

// Map source -> target given by one rational component per target coordinate.
class PolyMap {
 public:
  PolyMap(ChartPtr source, ChartPtr target, std::vector<ScalarField> components);

  static PolyMap identity(const ChartPtr& chart);

  const ChartPtr& source() const { return source_; }
  const ChartPtr& target() const { return target_; }
  const std::vector<ScalarField>& components() const { return components_; }

  // f(x) with target coordinates replaced by the components.
  ScalarField substitute(const ScalarField& f) const;
  // Jacobian J_ij = d(component_i)/d(source_j).
  Mat<ScalarField> jacobian() const;

 private:
  ChartPtr source_, target_;
  std::vector<ScalarField> components_;
};

// (outer o inner)(x) = outer(inner(x)).
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

DifferentialForm pullback(const PolyMap& phi, const DifferentialForm& w);
// Push a multivector on the source forward through a diffeomorphism with
// inverse psi_inv (target -> source).
MultiVectorField pushforward(const PolyMap& psi, const PolyMap& psi_inv, const MultiVectorField& A);

}  // namespace jforge
