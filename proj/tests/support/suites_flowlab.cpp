#include <cmath>
#include <sstream>

#include "jforge/extcalc/calculus.hpp"
#include "jforge/extcalc/grammar.hpp"
#include "jforge/flowlab/characteristic.hpp"
#include "jforge/flowlab/decomposition.hpp"
#include "jforge/flowlab/gray.hpp"
#include "suites.hpp"

namespace jforge::testing {

namespace {

RVec v3(Real a, Real b, Real c) {
  RVec v(3);
  v << a, b, c;
  return v;
}

RVec v4(Real a, Real b, Real c, Real d) {
  RVec v(4);
  v << a, b, c, d;
  return v;
}

const ChartPtr& R3() {
  static ChartPtr c = make_chart({"x", "y", "z"});
  return c;
}

const ContactData& standard() {
  static ContactData C(parse_form("d z + x*d y", R3()));
  return C;
}

GridSpec cube(Real half, int nodes, Real t0, Real t1, Real h) {
  return GridSpec{v3(-half, -half, -half), v3(half, half, half), {nodes, nodes, nodes}, t0, t1, h};
}

std::string sci(Real v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << static_cast<double>(v);
  return s.str();
}

// Max deviation from phi_t(x, y, z) = (e^t x, y, e^t z), lambda_t = e^t.
Real z_flow_error(const FlowResult& R) {
  Real worst = 0;
  for (std::size_t i = 0; i < R.seeds.size(); ++i) {
    const RVec& u = R.seeds[i];
    const Trajectory& tr = R.trajectories[i];
    for (std::size_t k = 0; k < tr.t.size(); ++k) {
      const Real e = std::exp(tr.t[k]);
      worst = std::max({worst, (tr.x[k] - v3(e * u(0), u(1), e * u(2))).cwiseAbs().maxCoeff(),
                        std::fabs(tr.lambda[k] - e)});
    }
  }
  return worst;
}

}  // namespace

SuiteResult flow_conformality_check() {
  SuiteResult res;
  const ContactData& C = standard();
  // Certify symbolically first: L_X alpha = dH(R) alpha for X = X_z.
  const ScalarField z = parse_scalar("z", R3());
  const MultiVectorField X = contact_hamiltonian(C, z);
  ++res.cases;
  if (lie_derivative(X, C.alpha()) != pair(gradient(z, R3()), C.reeb()) * C.alpha())
    res.fail("X_z is not a certified contact field");

  const ScalarFn H = time_lifted_fn(coordinate_fn(3, 2));
  std::vector<RVec> seeds = cube(1, 3, 0, 1, 1).node_points();
  const std::vector<RVec> probes{v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)};
  Real err[2];
  for (int pass = 0; pass < 2; ++pass) {
    FlowProblem P(NumericContact(C), H, cube(4, 2, 0, 1, pass ? 5e-4L : 1e-3L));
    FlowResult R = integrate_contact_flow(P, seeds);
    err[pass] = z_flow_error(R);
    if (pass) continue;
    ++res.cases;
    if (!(err[0] < 1e-6L)) res.fail("closed-form residual " + sci(err[0]) + " >= 1e-6");
    const Real conf = conformal_factor_check(P, R, probes);
    ++res.cases;
    if (!(conf < 1e-6L)) res.fail("conformal residual " + sci(conf) + " >= 1e-6");
    // Detector sanity: lambda forced to 1 must be caught.
    FlowResult wrong = R;
    for (Trajectory& tr : wrong.trajectories) std::fill(tr.lambda.begin(), tr.lambda.end(), Real(1));
    ++res.cases;
    if (!(conformal_factor_check(P, wrong, probes) > 0.5L)) res.fail("lambda = 1 not detected");
  }
  ++res.cases;
  const Real ratio = err[0] / err[1];
  if (!(ratio >= 4)) res.fail("order check: halving h reduced the residual only by " + sci(ratio));
  if (res.ok()) res.detail = "residual " + sci(err[0]) + ", halving ratio " + sci(ratio);
  return res;
}

SuiteResult characteristic_check(int nodes) {
  SuiteResult res;
  const ContactData& C = standard();
  {
    FlowProblem P(NumericContact(C), constant_fn(4, 0), cube(1, nodes, -0.4L, 0.4L, 1e-2L));
    CharacteristicResult R = characteristic_transform(P, 0.5L, false);
    ++res.cases;
    bool exact = true;
    for (std::size_t i = 0; i < R.nodes.size(); ++i)
      for (std::size_t k = 0; k < R.times.size(); ++k) {
        const RVec psi = R.Psi(i, k);
        exact = exact && psi.head(3) == R.nodes[i] && psi(3) == R.times[k] && psi(4) == 0;
      }
    if (!exact) res.fail("H = 0 does not give Psi(u, t) = (u, t, 0) exactly");
  }
  Real f1[2];
  for (int pass = 0; pass < 2; ++pass) {
    // Small bump supported in |u - c|^2 + t^2 < 0.81.
    FlowProblem P(NumericContact(C), bump_fn(v4(0.1L, 0, -0.1L, 0), 0.9L, 0.05L),
                  cube(1, nodes, -0.4L, 0.4L, pass ? 5e-3L : 1e-2L));
    CharacteristicResult R = characteristic_transform(P, 0.5L, pass == 0);
    f1[pass] = R.f1_residual;
    if (pass) continue;
    ++res.cases;
    if (!(R.f1_residual < 1e-6L)) res.fail("F1 residual " + sci(R.f1_residual) + " >= 1e-6");
    ++res.cases;
    if (!(R.leaf_residual < 1e-6L)) res.fail("leaf proportionality residual " + sci(R.leaf_residual));
    // Nodes where H vanishes for all t stay fixed exactly.
    ++res.cases;
    for (std::size_t i = 0; i < R.nodes.size(); ++i) {
      if ((R.nodes[i] - v3(0.1L, 0, -0.1L)).norm() < 0.9L) continue;
      for (std::size_t k = 0; k < R.times.size(); ++k)
        if (R.phi[i][k] != R.nodes[i]) {
          res.fail("node outside the support of H moved");
          break;
        }
    }
  }
  ++res.cases;
  const Real ratio = f1[0] / f1[1];
  if (!(ratio >= 4)) res.fail("order check: halving h reduced the F1 residual only by " + sci(ratio));
  if (res.ok()) res.detail = "F1 residual " + sci(f1[0]) + ", halving ratio " + sci(ratio);
  return res;
}

SuiteResult decomposition_check(int nodes) {
  SuiteResult res;
  const ContactData& C = standard();
  const GridSpec g = cube(1, nodes, 0, 1, 1e-2L);
  const ScalarFn t = coordinate_fn(4, 3);
  FormFamily fam(NumericContact(C), {{0, product_fn({t, time_lifted_fn(bump_fn(v3(-0.4L, 0, 0), 0.5L, 0.1L))})},
                                     {2, product_fn({t, time_lifted_fn(bump_fn(v3(0.4L, 0.1L, 0), 0.5L, 0.1L))})}});
  const std::vector<CoverBox> cover{{v3(-1.2L, -1.2L, -1.2L), v3(0.3L, 1.2L, 1.2L)},
                                    {v3(-0.3L, -1.2L, -1.2L), v3(1.2L, 1.2L, 1.2L)}};
  DecompResult R = primitive_decomposition(fam, g, cover);
  ++res.cases;
  if (!(R.reconstruction_residual <= 1e-12L)) res.fail("reconstruction residual " + sci(R.reconstruction_residual));
  ++res.cases;
  if (!(R.partition_residual <= 1e-12L)) res.fail("partition of unity residual " + sci(R.partition_residual));
  ++res.cases;
  Real worst = INFINITY;
  for (const auto& row : R.min_contact_top)
    for (Real v : row) worst = std::min(worst, v);
  if (!R.all_contact || !(worst > 0)) res.fail("a partial sum is not contact at a node");
  ++res.cases;
  if (R.primitives.empty()) res.fail("no primitives for a nonzero perturbation");
  if (res.ok())
    res.detail = "n = " + std::to_string(R.n) + ", " + std::to_string(R.primitives.size()) +
                 " primitives, reconstruction " + sci(R.reconstruction_residual) + ", min oriented top " + sci(worst);
  return res;
}

SuiteResult gray_check(int nodes) {
  SuiteResult res;
  const ContactData& C = standard();
  const GridSpec g = cube(1, nodes, 0, 1, 1e-2L);
  {
    GrayStepResult Z = gray_step(C, constant_fn(3, 0), constant_fn(3, 0), g);
    ++res.cases;
    for (std::size_t i = 0; i < Z.nodes.size(); ++i)
      if (Z.f1[i] != Z.nodes[i]) {
        res.fail("r = s = 0 does not give f1 = f0 exactly");
        break;
      }
  }
  GrayStepResult G = gray_step(C, bump_fn(v3(0.1L, -0.2L, 0.1L), 0.6L, 1e-3L), coordinate_fn(3, 0), g);
  ++res.cases;
  if (!(G.conformality_residual < 1e-5L)) res.fail("conformality residual " + sci(G.conformality_residual));
  ++res.cases;
  if (G.locality_nodes == 0) res.fail("no nodes outside the support");
  else if (!(G.locality_residual < 1e-10L)) res.fail("locality residual " + sci(G.locality_residual));
  ++res.cases;
  bool moved = false;
  for (std::size_t i = 0; i < G.nodes.size(); ++i) moved = moved || G.f1[i] != G.nodes[i];
  if (!moved) res.fail("f1 is the identity for a nonzero perturbation");
  if (res.ok())
    res.detail = "conformality " + sci(G.conformality_residual) + ", locality " + sci(G.locality_residual) + " on " +
                 std::to_string(G.locality_nodes) + " nodes";
  return res;
}

}  // namespace jforge::testing
