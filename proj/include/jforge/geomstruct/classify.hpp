#pragma once

#include <optional>

#include "jforge/geomstruct/nondeg.hpp"

namespace jforge {

struct LCSPair {
  DifferentialForm omega;
  DifferentialForm theta;  // Lee form
};

struct Classification {
  enum class Kind { Symplectic, LCS, Degenerate, NotConformallyClosed };
  Kind kind;
  std::optional<DifferentialForm> theta;  // set for LCS
  NondegReport report;
};

const char* to_string(Classification::Kind k);

Classification classify_2form(const DifferentialForm& omega, Samples samples = {});

// Exact solve of d omega + theta ^ omega = 0; nullopt when no solution exists.
std::optional<DifferentialForm> lee_form(const DifferentialForm& omega);

// pi(a, b) = omega(b^{-1} a, b^{-1} b) with b(X) = i_X omega. Any nondegenerate omega.
MultiVectorField inverse_bivector(const DifferentialForm& omega);

// Requires a closed, not identically degenerate omega.
MultiVectorField poisson_from_symplectic(const DifferentialForm& omega);

// Checks dtheta = 0, d omega + theta ^ omega = 0 and nondegeneracy.
bool is_lcs_pair(const LCSPair& p);

}  // namespace jforge
