#pragma once

#include <vector>

#include "jforge/flowlab/flow.hpp"

namespace jforge {

struct GrayOptions {
  Real epsilon = 2;  // H lives on M x (-epsilon, epsilon); must exceed sup |s| + plateau_outer
  Real plateau_inner = 0.25L, plateau_outer = 0.5L;  // rho = 1 on |x| <= inner, 0 beyond outer
  Real delta = 1e-5L;                                 // finite-difference step for the Jacobian of f1
  Real contact_tol = 1e-9L;
};

struct GrayStepResult {
  std::vector<RVec> nodes;
  std::vector<RVec> f1;              // sampled map
  Real conformality_residual = 0;    // max |(f1^* alpha_0 ^ alpha_1)(e_a, e_b)|
  Real locality_residual = 0;        // max |f1(u) - u| where r and dr vanish
  std::size_t locality_nodes = 0;
};

// H(u, x) = -r(u) rho(x - s(u)).
ScalarFn gray_hamiltonian(ScalarFn r, ScalarFn s, Real inner, Real outer);

// f0 = identity. f1(u) = psi_{s(u)}^{-1}(u) for the flow psi of X_{H^t}.
// Throws DomainError if alpha_1 = alpha_0 + r ds is not contact at a node, or on
// transversality failure.
GrayStepResult gray_step(const ContactData& C, ScalarFn r, ScalarFn s, const GridSpec& grid,
                         const GrayOptions& opt = {});

}  // namespace jforge
