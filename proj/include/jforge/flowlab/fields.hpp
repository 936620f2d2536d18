#pragma once

#include <memory>
#include <vector>

#include "jforge/symexpr/scalar_field.hpp"

namespace jforge {

using Real = long double;
using RVec = Vec<Real>;
using RMat = Mat<Real>;

// Long double evaluator of a rational function, built once from its terms.
class CompiledField {
 public:
  CompiledField() = default;
  explicit CompiledField(const ScalarField& f);
  bool is_zero() const { return num_.empty(); }
  // Throws PoleError where the denominator vanishes.
  Real operator()(const RVec& x) const;

 private:
  struct Mono {
    Real c;
    std::vector<std::pair<int, int>> powers;  // (coordinate, exponent)
  };
  static Real eval(const std::vector<Mono>& p, const RVec& x);
  std::vector<Mono> num_, den_;
};

// Smooth scalar with gradient on R^dim.
class NumericScalar {
 public:
  virtual ~NumericScalar() = default;
  virtual int dim() const = 0;
  virtual Real value(const RVec& x) const = 0;
  virtual RVec gradient(const RVec& x) const = 0;
};

using ScalarFn = std::shared_ptr<const NumericScalar>;

// exp(1 - 1/(1-v^2)) on |v| < 1, else 0; peak value 1.
Real mollifier(Real v2);
Real mollifier_dv2(Real v2);  // derivative in v^2

// 1 for |s| <= a, 0 for |s| >= b, smooth in between.
Real plateau(Real s, Real a, Real b);
Real plateau_ds(Real s, Real a, Real b);

ScalarFn constant_fn(int dim, Real c);
ScalarFn symbolic_fn(const ScalarField& f, int dim);
// amplitude * mollifier(|x-c|^2 / radius^2)
ScalarFn bump_fn(RVec center, Real radius, Real amplitude = 1);
// amplitude on |x-c| <= inner, zero beyond radius.
ScalarFn plateau_bump_fn(RVec center, Real inner, Real radius, Real amplitude = 1);
// Product over axes of 1D mollifiers on the box center +- half.
ScalarFn box_bump_fn(RVec center, RVec half);
// Product over axes of 1D plateaus: 1 on center +- inner, 0 outside center +- outer.
ScalarFn box_plateau_fn(RVec center, RVec inner, RVec outer);
ScalarFn sum_fn(std::vector<ScalarFn> terms);
ScalarFn product_fn(std::vector<ScalarFn> factors);
ScalarFn scaled_fn(ScalarFn f, Real c);
// g(x_1..x_n, t) = f(x_1..x_n), for time-independent Hamiltonians.
ScalarFn time_lifted_fn(ScalarFn f);
// Coordinate function x_i.
ScalarFn coordinate_fn(int dim, int i);

}  // namespace jforge
