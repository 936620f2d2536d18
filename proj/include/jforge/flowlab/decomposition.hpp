#pragma once

#include <vector>

#include "jforge/flowlab/flow.hpp"

namespace jforge {

// alpha_t = alpha_0 + sum_k c_k(u, t) dx_{axis_k}, with c_k(u, 0) = 0.
struct FormFamily {
  struct Term {
    int axis;
    ScalarFn coeff;  // function of (u, t)
  };
  FormFamily(NumericContact base, std::vector<Term> terms);

  NumericContact base;
  std::vector<Term> terms;

  int dim() const { return base.dim(); }
  RVec perturbation(const RVec& u, Real t) const;
  RMat perturbation_jacobian(const RVec& u, Real t) const;  // (i, j) = d/du_j of component i
  RVec alpha(const RVec& u, Real t) const { return base.alpha(u) + perturbation(u, t); }
  RMat d_alpha(const RVec& u, Real t) const;
};

struct CoverBox {
  RVec lo, hi;
};

struct DecompOptions {
  Real rho_shrink = 0.8L;  // rho^i supported in the cover box scaled by this about its center
  Real sigma_inner = 0.85L, sigma_outer = 0.95L;  // sigma^i = 1 inside, 0 outside these scalings
  int max_n = 1024;
  int time_samples = 11;  // uniform samples of [0, 1], block endpoints are added
  Real contact_tol = 1e-9L;
};

// beta^l_t = r^l_t ds^l with r = rho^box (alpha_{t'} - alpha_{k/n})_axis, s = sigma^box x_axis,
// t' = t clamped to [k/n, (k+1)/n].
struct Primitive {
  int block, box, axis;
};

struct DecompResult {
  int n = 1;
  std::vector<CoverBox> cover;
  std::vector<ScalarFn> rho, sigma;
  std::vector<Primitive> primitives;
  std::vector<RVec> nodes;
  std::vector<Real> times;
  // min over nodes of the top coefficient of alpha^(j)_t ^ (d alpha^(j)_t)^m, oriented by
  // alpha_0 (a sign change between nodes means a zero in between), [time][j], j = 0..N
  std::vector<std::vector<Real>> min_contact_top;
  Real reconstruction_residual = 0;
  Real partition_residual = 0;  // max |sum rho - 1| over nodes where the perturbation is nonzero
  bool all_contact = false;

  Real r(const FormFamily& fam, std::size_t l, const RVec& u, Real t) const;
  Real s(std::size_t l, const RVec& u) const;
};

// Throws DomainError if some alpha_t is not contact at a node, the family does not start at
// alpha_0, the cover misses the support, or n would exceed max_n.
DecompResult primitive_decomposition(const FormFamily& fam, const GridSpec& grid, const std::vector<CoverBox>& cover,
                                     const DecompOptions& opt = {});

}  // namespace jforge
