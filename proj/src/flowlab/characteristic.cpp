#include "jforge/flowlab/characteristic.hpp"

#include <cmath>
#include <sstream>

#include "jforge/flowlab/parallel.hpp"

namespace jforge {

RVec CharacteristicResult::F(std::size_t node, std::size_t k) const {
  const RVec& p = phi[node][k];
  RVec out(p.size() + 1);
  out.head(p.size()) = p;
  out(p.size()) = times[k];
  return out;
}

RVec CharacteristicResult::Psi(std::size_t node, std::size_t k) const {
  RVec f = F(node, k);
  RVec out(f.size() + 1);
  out.head(f.size()) = f;
  out(f.size()) = H->value(f);
  return out;
}

void check_graph_transversality(const FlowProblem& P, const std::vector<RVec>& nodes, const std::vector<Real>& times) {
  const int n = P.contact.dim();
  std::ostringstream bad;
  int count = 0;
  for (const RVec& u : nodes) {
    const bool alpha_zero = P.contact.alpha(u).isZero(0);
    if (!alpha_zero) continue;
    for (Real t : times) {
      RVec ut(n + 1);
      ut.head(n) = u;
      ut(n) = t;
      if (P.H->value(ut) != 0) continue;
      if (count++ < 8) {
        bad << " (";
        for (int i = 0; i < n; ++i) bad << static_cast<double>(u(i)) << ", ";
        bad << "t=" << static_cast<double>(t) << ")";
      }
    }
  }
  if (count) throw DomainError("graph of H is not transversal to ker(alpha - y dx) at " + std::to_string(count) +
                               " samples:" + bad.str());
}

namespace {

// Five-point derivative at index k of equally spaced samples.
RVec stencil(const std::vector<RVec>& x, std::size_t k, Real h) {
  return (x[k - 2] - 8 * x[k - 1] + 8 * x[k + 1] - x[k + 2]) / (12 * h);
}

struct Half {
  Trajectory tr;
  Real h;
};

Half run(const FlowProblem& P, const RVec& u, Real t_end) {
  const int steps = P.grid.steps(0, t_end);
  Half out{integrate_trajectory(P, u, 0, t_end, steps), steps ? t_end / steps : 0};
  return out;
}

Real f1_on(const FlowProblem& P, const Half& half) {
  const int n = P.contact.dim();
  Real worst = 0;
  const std::vector<RVec>& x = half.tr.x;
  for (std::size_t k = 2; k + 2 < x.size(); ++k) {
    const RVec v = stencil(x, k, half.h);
    RVec ut(n + 1);
    ut.head(n) = x[k];
    ut(n) = half.tr.t[k];
    worst = std::max(worst, std::fabs(P.contact.alpha(x[k]).dot(v) - P.H->value(ut)));
  }
  return worst;
}

}  // namespace

CharacteristicResult characteristic_transform(const FlowProblem& P, Real epsilon, bool leaf_probes, Real delta) {
  const GridSpec& g = P.grid;
  if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
  if (!(g.t0 <= 0 && g.t1 >= 0)) throw DomainError("time range must contain 0");
  if (!(g.t0 > -epsilon && g.t1 < epsilon)) throw DomainError("time range must lie inside (-epsilon, epsilon)");
  const int n = P.contact.dim();

  CharacteristicResult out;
  out.H = P.H;
  out.nodes = g.node_points();

  const int back = g.steps(g.t0, 0), fwd = g.steps(0, g.t1);
  for (int k = back; k > 0; --k) out.times.push_back(g.t0 * k / back);
  out.zero_index = out.times.size();
  out.times.push_back(0);
  for (int k = 1; k <= fwd; ++k) out.times.push_back(k == fwd ? g.t1 : g.t1 * k / fwd);
  check_graph_transversality(P, out.nodes, out.times);

  const std::size_t N = out.nodes.size();
  out.phi.resize(N);
  out.lambda.resize(N);
  std::vector<Real> f1(N, 0), leaf(N, 0);
  parallel_for(N, [&](std::size_t i) {
    const RVec& u = out.nodes[i];
    Half b = run(P, u, g.t0), f = run(P, u, g.t1);
    auto& ph = out.phi[i];
    auto& la = out.lambda[i];
    for (std::size_t k = b.tr.x.size(); k-- > 1;) {
      ph.push_back(b.tr.x[k]);
      la.push_back(b.tr.lambda[k]);
    }
    for (std::size_t k = 0; k < f.tr.x.size(); ++k) {
      ph.push_back(f.tr.x[k]);
      la.push_back(f.tr.lambda[k]);
    }
    f1[i] = std::max(f1_on(P, b), f1_on(P, f));
    if (!leaf_probes) return;
    const RVec a0 = P.contact.alpha(u);
    Real w = 0;
    for (int j = 0; j < n; ++j) {
      RVec e = RVec::Zero(n);
      e(j) = delta;
      if (!g.contains(u + e) || !g.contains(u - e)) continue;  // boundary nodes lack a symmetric stencil
      for (Real end : {g.t0, g.t1}) {
        Half p = run(P, u + e, end), m = run(P, u - e, end);
        const Half& c = end == g.t0 ? b : f;
        for (std::size_t k = 0; k < c.tr.x.size(); ++k) {
          const RVec dv = (p.tr.x[k] - m.tr.x[k]) / (2 * delta);
          w = std::max(w, std::fabs(P.contact.alpha(c.tr.x[k]).dot(dv) - c.tr.lambda[k] * a0(j)));
        }
      }
    }
    leaf[i] = w;
  });
  for (std::size_t i = 0; i < N; ++i) {
    out.f1_residual = std::max(out.f1_residual, f1[i]);
    out.leaf_residual = std::max(out.leaf_residual, leaf[i]);
  }
  return out;
}

}  // namespace jforge
