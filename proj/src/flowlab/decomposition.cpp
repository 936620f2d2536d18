#include "jforge/flowlab/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jforge/flowlab/parallel.hpp"

namespace jforge {

FormFamily::FormFamily(NumericContact b, std::vector<Term> t) : base(std::move(b)), terms(std::move(t)) {
  for (const Term& k : terms) {
    if (k.axis < 0 || k.axis >= dim()) throw DomainError("perturbation axis out of range");
    if (!k.coeff || k.coeff->dim() != dim() + 1) throw DomainError("perturbation coefficient must depend on (u, t)");
  }
}

namespace {
RVec with_time(const RVec& u, Real t) {
  RVec ut(u.size() + 1);
  ut.head(u.size()) = u;
  ut(u.size()) = t;
  return ut;
}
}  // namespace

RVec FormFamily::perturbation(const RVec& u, Real t) const {
  RVec p = RVec::Zero(dim());
  const RVec ut = with_time(u, t);
  for (const Term& k : terms) p(k.axis) += k.coeff->value(ut);
  return p;
}

RMat FormFamily::perturbation_jacobian(const RVec& u, Real t) const {
  RMat J = RMat::Zero(dim(), dim());
  const RVec ut = with_time(u, t);
  for (const Term& k : terms) J.row(k.axis) += k.coeff->gradient(ut).head(dim()).transpose();
  return J;
}

RMat FormFamily::d_alpha(const RVec& u, Real t) const {
  const RMat J = perturbation_jacobian(u, t);
  // d(sum p_i dx_i) has (a, b) coefficient d_a p_b - d_b p_a
  return base.d_alpha(u) + J.transpose() - J;
}

namespace {

class PartitionMember final : public NumericScalar {
 public:
  PartitionMember(std::vector<ScalarFn> phis, std::size_t i) : phis_(std::move(phis)), i_(i) {}
  int dim() const override { return phis_.front()->dim(); }
  Real value(const RVec& x) const override {
    Real S = 0;
    for (const auto& p : phis_) S += p->value(x);
    return S > 0 ? phis_[i_]->value(x) / S : 0;
  }
  RVec gradient(const RVec& x) const override {
    Real S = 0;
    RVec dS = RVec::Zero(dim());
    for (const auto& p : phis_) {
      S += p->value(x);
      dS += p->gradient(x);
    }
    if (!(S > 0)) return RVec::Zero(dim());
    const Real f = phis_[i_]->value(x);
    return (phis_[i_]->gradient(x) * S - f * dS) / (S * S);
  }

 private:
  std::vector<ScalarFn> phis_;
  std::size_t i_;
};

struct Partition {
  std::vector<ScalarFn> phi, rho, sigma;
};

Partition build_partition(const std::vector<CoverBox>& cover, int dim, const DecompOptions& opt) {
  if (cover.empty()) throw DomainError("empty cover");
  if (!(opt.rho_shrink > 0 && opt.rho_shrink < opt.sigma_inner && opt.sigma_inner < opt.sigma_outer &&
        opt.sigma_outer <= 1))
    throw DomainError("cover scalings must satisfy 0 < rho_shrink < sigma_inner < sigma_outer <= 1");
  Partition P;
  for (const CoverBox& b : cover) {
    if (b.lo.size() != dim || b.hi.size() != dim || (b.hi.array() <= b.lo.array()).any())
      throw DomainError("malformed cover box");
    const RVec c = (b.lo + b.hi) / 2, half = (b.hi - b.lo) / 2;
    P.phi.push_back(box_bump_fn(c, opt.rho_shrink * half));
    P.sigma.push_back(box_plateau_fn(c, opt.sigma_inner * half, opt.sigma_outer * half));
  }
  for (std::size_t i = 0; i < cover.size(); ++i) P.rho.push_back(std::make_shared<PartitionMember>(P.phi, i));
  return P;
}

std::string describe(const RVec& v) {
  std::ostringstream s;
  s << "(";
  for (int i = 0; i < v.size(); ++i) s << (i ? ", " : "") << static_cast<double>(v(i));
  s << ")";
  return s.str();
}

Real clamp_time(Real t, int k, int n) {
  const Real a = Real(k) / n, b = Real(k + 1) / n;
  return std::min(std::max(t, a), b);
}

// r, grad r, s, grad s of one primitive at (u, t).
struct PrimitiveValue {
  Real r, s;
  RVec dr, ds;
};

PrimitiveValue eval_primitive(const FormFamily& fam, const Partition& part, int n, const Primitive& p, const RVec& u,
                              Real t) {
  const Real tc = clamp_time(t, p.block, n), tk = Real(p.block) / n;
  const Real y = fam.perturbation(u, tc)(p.axis) - fam.perturbation(u, tk)(p.axis);
  const RVec dy = (fam.perturbation_jacobian(u, tc).row(p.axis) - fam.perturbation_jacobian(u, tk).row(p.axis)).transpose();
  const ScalarFn& rho = part.rho[static_cast<std::size_t>(p.box)];
  const ScalarFn& sig = part.sigma[static_cast<std::size_t>(p.box)];
  PrimitiveValue v;
  const Real rv = rho->value(u);
  v.r = rv * y;
  v.dr = rho->gradient(u) * y + rv * dy;
  const Real sv = sig->value(u);
  v.s = sv * u(p.axis);
  v.ds = sig->gradient(u) * u(p.axis);
  v.ds(p.axis) += sv;
  return v;
}

std::vector<Real> sample_times(int n, int samples) {
  std::vector<Real> t;
  for (int k = 0; k < samples; ++k) t.push_back(samples == 1 ? 1 : Real(k) / (samples - 1));
  for (int k = 0; k <= n; ++k) t.push_back(Real(k) / n);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

}  // namespace

Real DecompResult::r(const FormFamily& fam, std::size_t l, const RVec& u, Real t) const {
  const Primitive& p = primitives.at(l);
  const Real tc = clamp_time(t, p.block, n), tk = Real(p.block) / n;
  return rho[static_cast<std::size_t>(p.box)]->value(u) * (fam.perturbation(u, tc)(p.axis) - fam.perturbation(u, tk)(p.axis));
}

Real DecompResult::s(std::size_t l, const RVec& u) const {
  const Primitive& p = primitives.at(l);
  return sigma[static_cast<std::size_t>(p.box)]->value(u) * u(p.axis);
}

DecompResult primitive_decomposition(const FormFamily& fam, const GridSpec& grid, const std::vector<CoverBox>& cover,
                                     const DecompOptions& opt) {
  grid.validate();
  const int dim = fam.dim();
  if (grid.dim() != dim) throw DomainError("grid dimension differs from the form family");
  if (dim % 2 == 0) throw DomainError("contact forms need odd dimension");
  if (opt.max_n < 1 || opt.time_samples < 1) throw DomainError("bad decomposition options");
  const Partition part = build_partition(cover, dim, opt);
  const std::vector<RVec> nodes = grid.node_points();

  // Preconditions on the uniform samples.
  {
    const std::vector<Real> ts = sample_times(1, opt.time_samples);
    for (const RVec& u : nodes) {
      if (!fam.perturbation(u, 0).isZero(0)) throw DomainError("family does not start at alpha_0 at " + describe(u));
      Real S = 0;
      for (const auto& p : part.phi) S += p->value(u);
      const Real sign0 = contact_top(fam.base.alpha(u), fam.base.d_alpha(u)) < 0 ? -1 : 1;
      for (Real t : ts) {
        if (sign0 * contact_top(fam.alpha(u, t), fam.d_alpha(u, t)) <= opt.contact_tol)
          throw DomainError("alpha_t is not contact at " + describe(u) + ", t = " + std::to_string(static_cast<double>(t)));
        if (!(S > 0) && !fam.perturbation(u, t).isZero(0))
          throw DomainError("cover does not contain the support of the perturbation at " + describe(u));
      }
    }
  }

  for (int n = 1;; n *= 2) {
    if (n > opt.max_n) throw DomainError("time subdivision exceeds the cap " + std::to_string(opt.max_n));
    DecompResult R;
    R.n = n;
    R.cover = cover;
    R.rho = part.rho;
    R.sigma = part.sigma;
    R.nodes = nodes;
    R.times = sample_times(n, opt.time_samples);

    // Keep primitives whose r is not identically zero on the samples of their block.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < static_cast<int>(cover.size()); ++i)
        for (int j = 0; j < dim; ++j) {
          const Primitive p{k, i, j};
          bool nonzero = false;
          for (Real t : R.times) {
            if (t < Real(k) / n || t > Real(k + 1) / n) continue;
            for (const RVec& u : nodes)
              if (eval_primitive(fam, part, n, p, u, t).r != 0) {
                nonzero = true;
                break;
              }
            if (nonzero) break;
          }
          if (nonzero) R.primitives.push_back(p);
        }

    const std::size_t T = R.times.size(), L = R.primitives.size(), N = nodes.size();
    // Per node: [time][j] |top|, reconstruction and partition residuals.
    std::vector<std::vector<Real>> tops(N);
    std::vector<Real> recon(N, 0), part_res(N, 0);
    parallel_for(N, [&](std::size_t ni) {
      const RVec& u = nodes[ni];
      auto& out = tops[ni];
      out.assign(T * (L + 1), 0);
      Real S = 0;
      for (const auto& r : part.rho) S += r->value(u);
      for (std::size_t ti = 0; ti < T; ++ti) {
        const Real t = R.times[ti];
        RVec a = fam.base.alpha(u);
        RMat B = fam.base.d_alpha(u);
        const Real top0 = contact_top(a, B);
        const Real sign0 = top0 < 0 ? -1 : 1;
        out[ti * (L + 1)] = sign0 * top0;
        for (std::size_t l = 0; l < L; ++l) {
          const PrimitiveValue v = eval_primitive(fam, part, n, R.primitives[l], u, t);
          a += v.r * v.ds;
          B += v.dr * v.ds.transpose() - v.ds * v.dr.transpose();
          out[ti * (L + 1) + l + 1] = sign0 * contact_top(a, B);
        }
        recon[ni] = std::max(recon[ni], (a - fam.alpha(u, t)).cwiseAbs().maxCoeff());
        if (!fam.perturbation(u, t).isZero(0)) part_res[ni] = std::max(part_res[ni], std::fabs(S - 1));
      }
    });

    R.min_contact_top.assign(T, std::vector<Real>(L + 1, INFINITY));
    std::string failure;
    for (std::size_t ni = 0; ni < N; ++ni) {
      R.reconstruction_residual = std::max(R.reconstruction_residual, recon[ni]);
      R.partition_residual = std::max(R.partition_residual, part_res[ni]);
      for (std::size_t ti = 0; ti < T; ++ti)
        for (std::size_t j = 0; j <= L; ++j) {
          const Real v = tops[ni][ti * (L + 1) + j];
          R.min_contact_top[ti][j] = std::min(R.min_contact_top[ti][j], v);
          if (v <= opt.contact_tol && failure.empty())
            failure = "partial sum " + std::to_string(j) + " at t = " + std::to_string(static_cast<double>(R.times[ti])) +
                      " fails to be contact at " + describe(nodes[ni]);
        }
    }
    if (failure.empty()) {
      R.all_contact = true;
      return R;
    }
    if (2 * n > opt.max_n) throw DomainError("time subdivision exceeds the cap " + std::to_string(opt.max_n) + ": " + failure);
  }
}

}  // namespace jforge
