#include "jforge/flowlab/gray.hpp"

#include <cmath>
#include <sstream>

#include "jforge/flowlab/characteristic.hpp"
#include "jforge/flowlab/parallel.hpp"

namespace jforge {

namespace {

class GrayHamiltonian final : public NumericScalar {
 public:
  GrayHamiltonian(ScalarFn r, ScalarFn s, Real a, Real b) : r_(std::move(r)), s_(std::move(s)), a_(a), b_(b) {}
  int dim() const override { return r_->dim() + 1; }
  Real value(const RVec& x) const override {
    const RVec u = x.head(r_->dim());
    const Real r = r_->value(u);
    if (r == 0) return 0;
    return -r * plateau(x(r_->dim()) - s_->value(u), a_, b_);
  }
  RVec gradient(const RVec& x) const override {
    const int n = r_->dim();
    const RVec u = x.head(n);
    const Real r = r_->value(u);
    const RVec dr = r_->gradient(u);
    RVec g = RVec::Zero(n + 1);
    if (r == 0 && dr.isZero(0)) return g;
    const Real w = x(n) - s_->value(u);
    const Real p = plateau(w, a_, b_), dp = plateau_ds(w, a_, b_);
    g.head(n) = -dr * p;
    if (dp != 0) {
      g.head(n) += r * dp * s_->gradient(u);
      g(n) = -r * dp;
    }
    return g;
  }

 private:
  ScalarFn r_, s_;
  Real a_, b_;
};

std::string describe(const RVec& v) {
  std::ostringstream s;
  s << "(";
  for (int i = 0; i < v.size(); ++i) s << (i ? ", " : "") << static_cast<double>(v(i));
  s << ")";
  return s.str();
}

}  // namespace

ScalarFn gray_hamiltonian(ScalarFn r, ScalarFn s, Real inner, Real outer) {
  if (!r || !s || r->dim() != s->dim()) throw DomainError("r and s must live on the same manifold");
  return std::make_shared<GrayHamiltonian>(std::move(r), std::move(s), inner, outer);
}

GrayStepResult gray_step(const ContactData& C, ScalarFn r, ScalarFn s, const GridSpec& grid, const GrayOptions& opt) {
  const int n = C.dim();
  if (!r || !s || r->dim() != n || s->dim() != n) throw DomainError("r and s must be functions on M");
  FlowProblem P(NumericContact(C), gray_hamiltonian(r, s, opt.plateau_inner, opt.plateau_outer), grid);
  GrayStepResult out;
  out.nodes = grid.node_points();

  // alpha_1 = alpha_0 + r ds must be contact with the orientation of alpha_0.
  for (const RVec& u : out.nodes) {
    const RVec ds = s->gradient(u), dr = r->gradient(u);
    const RVec a1 = P.contact.alpha(u) + r->value(u) * ds;
    const RMat B1 = P.contact.d_alpha(u) + dr * ds.transpose() - ds * dr.transpose();
    const Real sign0 = contact_top(P.contact.alpha(u), P.contact.d_alpha(u)) < 0 ? -1 : 1;
    if (sign0 * contact_top(a1, B1) <= opt.contact_tol)
      throw DomainError("alpha_0 + r ds is not contact at " + describe(u));
  }

  Real smax = 0;
  for (const RVec& u : out.nodes) smax = std::max(smax, std::fabs(s->value(u)));
  if (!(smax + opt.plateau_outer < opt.epsilon)) throw DomainError("epsilon too small for sup |s| and the plateau width");
  // Same step count everywhere so f1 depends smoothly on u.
  const int steps = std::max(1, grid.steps(0, smax));
  {
    std::vector<Real> ts;
    for (int k = -steps; k <= steps; ++k) ts.push_back(smax * k / steps);
    check_graph_transversality(P, out.nodes, ts);
  }

  auto f1 = [&](const RVec& u) -> RVec {
    const Real su = s->value(u);
    if (su == 0) return u;
    return integrate_trajectory(P, u, su, 0, steps).x.back();
  };

  const std::size_t N = out.nodes.size();
  out.f1.resize(N);
  std::vector<Real> conf(N, 0), loc(N, -1);
  parallel_for(N, [&](std::size_t i) {
    const RVec& u = out.nodes[i];
    out.f1[i] = f1(u);
    if (r->value(u) == 0 && r->gradient(u).isZero(0)) loc[i] = (out.f1[i] - u).cwiseAbs().maxCoeff();
    RMat J(n, n);
    for (int j = 0; j < n; ++j) {
      RVec e = RVec::Zero(n);
      e(j) = opt.delta;
      if (!grid.contains(u + e) || !grid.contains(u - e)) return;  // no symmetric stencil on the boundary
      J.col(j) = (f1(u + e) - f1(u - e)) / (2 * opt.delta);
    }
    const RVec beta = pull_covector(P.contact.alpha(out.f1[i]), J);
    const RVec gamma = P.contact.alpha(u) + r->value(u) * s->gradient(u);
    Real w = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) w = std::max(w, std::fabs(beta(a) * gamma(b) - beta(b) * gamma(a)));
    conf[i] = w;
  });
  for (std::size_t i = 0; i < N; ++i) {
    out.conformality_residual = std::max(out.conformality_residual, conf[i]);
    if (loc[i] >= 0) {
      ++out.locality_nodes;
      out.locality_residual = std::max(out.locality_residual, loc[i]);
    }
  }
  return out;
}

}  // namespace jforge
