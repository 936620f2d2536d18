#pragma once

#include <vector>

#include "jforge/flowlab/numeric_contact.hpp"

namespace jforge {

struct GridSpec {
  RVec lo, hi;             // box bounds per coordinate
  std::vector<int> nodes;  // nodes per axis
  Real t0 = 0, t1 = 1;
  Real h = 1e-3L;

  int dim() const { return static_cast<int>(lo.size()); }
  // Throws DomainError on non-finite bounds, lo >= hi, nodes < 2, h <= 0 or t1 < t0.
  void validate() const;
  bool contains(const RVec& x) const;
  // Lexicographic order, last axis fastest.
  std::vector<RVec> node_points() const;
  // Number of RK4 steps covering [a, b]: ceil(|b - a| / h).
  int steps(Real a, Real b) const;
};

// Contact form, time-dependent Hamiltonian H(u_1..u_n, t) and grid.
struct FlowProblem {
  FlowProblem(NumericContact contact, ScalarFn H, GridSpec grid);
  NumericContact contact;
  ScalarFn H;
  GridSpec grid;
};

struct Trajectory {
  std::vector<Real> t;
  std::vector<RVec> x;
  std::vector<Real> lambda;
  // H^t(psi_t u) / lambda_t - H^0(u) - int_0^t (dH/ds)(psi_s u) / lambda_s ds, zero for the exact flow.
  std::vector<Real> energy_residual;
};

struct FlowResult {
  std::vector<RVec> seeds;
  std::vector<Trajectory> trajectories;
  Real max_energy_residual = 0;
  Real min_lambda = 1, max_lambda = 1;
};

// RK4 from t_start to t_end (either direction) in `steps` equal steps, state augmented
// with int theta so that lambda = exp(int theta). Throws DomainError if the box is left.
Trajectory integrate_trajectory(const FlowProblem& P, const RVec& seed, Real t_start, Real t_end, int steps);

// Every seed integrated over [grid.t0, grid.t1] with psi_{t0} = id.
FlowResult integrate_contact_flow(const FlowProblem& P, const std::vector<RVec>& seeds);

// max |alpha_{phi_t u}(d phi_t v) - lambda_t alpha_u(v)| over seeds, probes and steps;
// d phi_t v by central differences of neighbouring trajectories.
Real conformal_factor_check(const FlowProblem& P, const FlowResult& R, const std::vector<RVec>& probes,
                            Real delta = 1e-5L);

}  // namespace jforge
