#include "jforge/flowlab/flow.hpp"

#include <cmath>
#include <sstream>

#include "jforge/flowlab/parallel.hpp"

namespace jforge {

void GridSpec::validate() const {
  if (lo.size() != hi.size() || static_cast<int>(nodes.size()) != dim() || dim() == 0)
    throw DomainError("grid bounds and node counts disagree in dimension");
  for (int i = 0; i < dim(); ++i) {
    if (!std::isfinite(lo(i)) || !std::isfinite(hi(i))) throw DomainError("grid bounds must be finite");
    if (!(lo(i) < hi(i))) throw DomainError("grid needs lo < hi on every axis");
    if (nodes[static_cast<std::size_t>(i)] < 2) throw DomainError("grid needs at least 2 nodes per axis");
  }
  if (!(h > 0) || !std::isfinite(h)) throw DomainError("time step must be positive");
  if (!std::isfinite(t0) || !std::isfinite(t1) || t1 < t0) throw DomainError("time range must satisfy t0 <= t1");
}

bool GridSpec::contains(const RVec& x) const {
  for (int i = 0; i < dim(); ++i)
    if (!(x(i) >= lo(i) && x(i) <= hi(i))) return false;
  return true;
}

std::vector<RVec> GridSpec::node_points() const {
  validate();
  std::vector<RVec> out;
  std::vector<int> idx(static_cast<std::size_t>(dim()), 0);
  while (true) {
    RVec p(dim());
    for (int i = 0; i < dim(); ++i) {
      const int m = nodes[static_cast<std::size_t>(i)] - 1;
      const int k = idx[static_cast<std::size_t>(i)];
      p(i) = k == m ? hi(i) : lo(i) + (hi(i) - lo(i)) * k / m;
    }
    out.push_back(std::move(p));
    int a = dim() - 1;
    while (a >= 0 && ++idx[static_cast<std::size_t>(a)] == nodes[static_cast<std::size_t>(a)]) idx[static_cast<std::size_t>(a--)] = 0;
    if (a < 0) break;
  }
  return out;
}

int GridSpec::steps(Real a, Real b) const {
  const Real n = std::ceil(std::fabs(b - a) / h - 1e-9L);
  return static_cast<int>(std::max<Real>(n, 0));
}

FlowProblem::FlowProblem(NumericContact c, ScalarFn h, GridSpec g)
    : contact(std::move(c)), H(std::move(h)), grid(std::move(g)) {
  grid.validate();
  if (grid.dim() != contact.dim()) throw DomainError("grid dimension differs from the contact manifold");
  if (!H || H->dim() != contact.dim() + 1) throw DomainError("Hamiltonian must be a function of (u, t)");
}

namespace {

// State: u (n), Theta, J.
RVec rhs(const FlowProblem& P, Real t, const RVec& y) {
  const int n = P.contact.dim();
  RVec ut(n + 1);
  ut.head(n) = y.head(n);
  ut(n) = t;
  const Real H = P.H->value(ut);
  const RVec g = P.H->gradient(ut);
  const RVec dH = g.head(n);
  const RVec u = y.head(n);
  RVec out(n + 2);
  if (H == 0 && dH.isZero(0)) {
    out.head(n).setZero();
    out(n) = 0;
  } else {
    const RVec a = P.contact.alpha(u);
    const RVec R = P.contact.reeb(u);
    out.head(n) = NumericContact::hamiltonian_field(a, P.contact.d_alpha(u), R, H, dH);
    out(n) = dH.dot(R);
  }
  out(n + 1) = g(n) == 0 ? Real(0) : g(n) * std::exp(-y(n));
  return out;
}

Real energy(const FlowProblem& P, const RVec& y, Real t) {
  const int n = P.contact.dim();
  RVec ut(n + 1);
  ut.head(n) = y.head(n);
  ut(n) = t;
  return P.H->value(ut);
}

std::string describe(const RVec& v) {
  std::ostringstream s;
  s << "(";
  for (int i = 0; i < v.size(); ++i) s << (i ? ", " : "") << static_cast<double>(v(i));
  s << ")";
  return s.str();
}

}  // namespace

Trajectory integrate_trajectory(const FlowProblem& P, const RVec& seed, Real t_start, Real t_end, int steps) {
  const int n = P.contact.dim();
  if (seed.size() != n) throw DomainError("seed has the wrong dimension");
  if (!P.grid.contains(seed)) throw DomainError("seed " + describe(seed) + " lies outside the box");
  if (steps < 0) throw DomainError("negative step count");
  Trajectory tr;
  RVec y = RVec::Zero(n + 2);
  y.head(n) = seed;
  const Real e0 = energy(P, y, t_start);
  auto record = [&](Real t) {
    tr.t.push_back(t);
    tr.x.push_back(y.head(n));
    const Real lam = std::exp(y(n));
    tr.lambda.push_back(lam);
    tr.energy_residual.push_back(energy(P, y, t) / lam - e0 - y(n + 1));
  };
  record(t_start);
  const Real h = steps ? (t_end - t_start) / steps : 0;
  for (int k = 0; k < steps; ++k) {
    const Real t = t_start + h * k;
    const RVec k1 = rhs(P, t, y);
    const RVec k2 = rhs(P, t + h / 2, y + (h / 2) * k1);
    const RVec k3 = rhs(P, t + h / 2, y + (h / 2) * k2);
    const RVec k4 = rhs(P, t + h, y + h * k3);
    y += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    const Real tn = k + 1 == steps ? t_end : t_start + h * (k + 1);
    if (!P.grid.contains(y.head(n)))
      throw DomainError("trajectory from " + describe(seed) + " leaves the box at t = " +
                        std::to_string(static_cast<double>(tn)));
    record(tn);
  }
  return tr;
}

FlowResult integrate_contact_flow(const FlowProblem& P, const std::vector<RVec>& seeds) {
  FlowResult R;
  R.seeds = seeds;
  R.trajectories.resize(seeds.size());
  const int steps = P.grid.steps(P.grid.t0, P.grid.t1);
  parallel_for(seeds.size(), [&](std::size_t i) {
    R.trajectories[i] = integrate_trajectory(P, seeds[i], P.grid.t0, P.grid.t1, steps);
  });
  for (const Trajectory& tr : R.trajectories)
    for (std::size_t k = 0; k < tr.t.size(); ++k) {
      R.max_energy_residual = std::max(R.max_energy_residual, std::fabs(tr.energy_residual[k]));
      R.min_lambda = std::min(R.min_lambda, tr.lambda[k]);
      R.max_lambda = std::max(R.max_lambda, tr.lambda[k]);
    }
  return R;
}

Real conformal_factor_check(const FlowProblem& P, const FlowResult& R, const std::vector<RVec>& probes, Real delta) {
  const int steps = P.grid.steps(P.grid.t0, P.grid.t1);
  const std::size_t np = probes.size();
  std::vector<Real> worst(R.trajectories.size() * np, 0);
  parallel_for(worst.size(), [&](std::size_t job) {
    const std::size_t i = job / np;
    const RVec& v = probes[job % np];
    const RVec& u = R.seeds[i];
    const Trajectory& tr = R.trajectories[i];
    Trajectory plus = integrate_trajectory(P, u + delta * v, P.grid.t0, P.grid.t1, steps);
    Trajectory minus = integrate_trajectory(P, u - delta * v, P.grid.t0, P.grid.t1, steps);
    const Real base = P.contact.alpha(u).dot(v);
    Real w = 0;
    for (std::size_t k = 0; k < tr.t.size(); ++k) {
      const RVec dv = (plus.x[k] - minus.x[k]) / (2 * delta);
      const Real lhs = P.contact.alpha(tr.x[k]).dot(dv);
      w = std::max(w, std::fabs(lhs - tr.lambda[k] * base));
    }
    worst[job] = w;
  });
  Real m = 0;
  for (Real w : worst) m = std::max(m, w);
  return m;
}

}  // namespace jforge
