#pragma once

#include <vector>

#include "jforge/flowlab/flow.hpp"

namespace jforge {

struct CharacteristicResult {
  std::vector<RVec> nodes;
  std::vector<Real> times;  // increasing, contains 0
  std::size_t zero_index = 0;
  std::vector<std::vector<RVec>> phi;  // phi[node][k] = psi_{t_k}(u)
  std::vector<std::vector<Real>> lambda;
  Real f1_residual = 0;    // max |alpha(d psi/dt) - H o F|
  Real leaf_residual = 0;  // max |psi_t^* alpha(e_j) - lambda_t alpha(e_j)|
  ScalarFn H;

  RVec F(std::size_t node, std::size_t k) const;    // (psi_t u, t)
  RVec Psi(std::size_t node, std::size_t k) const;  // (psi_t u, t, H(psi_t u, t))
};

// Throws DomainError listing the (u, t) samples where the graph of H is tangent to
// ker(alpha - y dx), i.e. alpha(u) = 0 and H(u, t) = 0.
void check_graph_transversality(const FlowProblem& P, const std::vector<RVec>& nodes, const std::vector<Real>& times);

// Flows every grid node of P.grid forwards to t1 and backwards to t0; [t0, t1] must lie in
// (-epsilon, epsilon). leaf_probes enables the finite-difference proportionality residual.
CharacteristicResult characteristic_transform(const FlowProblem& P, Real epsilon, bool leaf_probes = true,
                                              Real delta = 1e-5L);

}  // namespace jforge
