#include "jforge/extcalc/grammar.hpp"
#include "jforge/geomstruct/jacobi.hpp"
#include "jforge/geomstruct/jet.hpp"
#include "random_objects.hpp"
#include "suites.hpp"

namespace jforge::testing {

namespace {

ChartPtr chart3() {
  static ChartPtr c = make_chart({"x", "y", "z"});
  return c;
}
ChartPtr chart4() {
  static ChartPtr c = make_chart({"x1", "y1", "x2", "y2"});
  return c;
}

std::vector<Point<Rational>> random_points(Rng& rng, const ChartPtr& c, int count) {
  std::vector<Point<Rational>> pts;
  for (int k = 0; k < count; ++k) {
    Vec<Rational> v(c->dim());
    for (int i = 0; i < c->dim(); ++i) v(i) = random_rational(rng, 4, 3);
    pts.emplace_back(c, v);
  }
  return pts;
}

bool contact_round_trip(const DifferentialForm& alpha, Samples pts, std::string* why) {
  ContactData C(alpha, pts);
  JacobiPair P = jacobi_from_contact(C);
  if (!jacobi_check(P).ok()) {
    *why = "contact pair fails jacobi_check for " + serialize(alpha);
    return false;
  }
  auto back = structure_from_nondeg_jacobi(P, pts);
  if (!std::holds_alternative<DifferentialForm>(back) || std::get<DifferentialForm>(back) != alpha) {
    *why = "contact -> Jacobi -> contact changed " + serialize(alpha);
    return false;
  }
  return true;
}

bool symplectic_round_trip(const DifferentialForm& omega, Samples pts, std::string* why) {
  MultiVectorField pi = poisson_from_symplectic(omega);
  if (!schouten_bracket(pi, pi).is_zero()) {
    *why = "[pi,pi] != 0 for " + serialize(omega);
    return false;
  }
  auto back = structure_from_nondeg_jacobi({pi, MultiVectorField(omega.chart(), 1)}, pts);
  if (!std::holds_alternative<LCSPair>(back)) {
    *why = "even-dimensional pair did not return an lcs pair";
    return false;
  }
  const LCSPair& p = std::get<LCSPair>(back);
  if (p.omega != omega || !p.theta.is_zero()) {
    *why = "symplectic -> Poisson -> symplectic changed " + serialize(omega);
    return false;
  }
  return true;
}

}  // namespace

SuiteResult contact_core_check() {
  SuiteResult res;
  const ChartPtr c = chart3();
  const DifferentialForm alpha = parse_form("d z + x*d y", c);
  ContactData C(alpha);
  auto check = [&](bool ok, const char* what) {
    ++res.cases;
    if (!ok) res.fail(what);
  };
  check(reeb_field(alpha) == parse_multivector("@z", c), "Reeb field is not @z");
  check(musical_phi(C, C.reeb()) == alpha, "phi(R) != alpha");
  check(contact_hamiltonian(C, ScalarField(1)) == C.reeb(), "X_1 != R");
  check(jacobi_check(jacobi_from_contact(C)).ok(), "contact Jacobi pair fails jacobi_check");
  return res;
}

SuiteResult dichotomy_suite(std::uint64_t seed, int randomized) {
  Rng rng(seed);
  SuiteResult res;
  std::string why;
  const DifferentialForm alpha0 = parse_form("d z + x*d y", chart3());
  const DifferentialForm omega0 = parse_form("d x1 ^ d y1 + d x2 ^ d y2", chart4());

  ++res.cases;
  if (!contact_round_trip(alpha0, random_points(rng, chart3(), 5), &why)) res.fail(why);
  ++res.cases;
  if (!symplectic_round_trip(omega0, random_points(rng, chart4(), 5), &why)) res.fail(why);

  // Shears have unit Jacobian, so pullbacks stay nondegenerate at every sample.
  for (int n = 0; n < randomized; ++n) {
    ++res.cases;
    try {
      auto [psi3, psi3_inv] = random_shear(rng, chart3());
      if (!contact_round_trip(pullback(psi3, alpha0), random_points(rng, chart3(), 3), &why)) res.fail(why);
      auto [psi4, psi4_inv] = random_shear(rng, chart4());
      if (!symplectic_round_trip(pullback(psi4, omega0), random_points(rng, chart4(), 3), &why)) res.fail(why);
    } catch (const Error& e) {
      res.fail(std::string("round trip threw: ") + e.what());
    }
  }
  return res;
}

namespace {
std::vector<JacobiPair> certified_pairs(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<JacobiPair> pairs;
  const DifferentialForm alpha0 = parse_form("d z + x*d y", chart3());
  pairs.push_back(jacobi_from_contact(ContactData(alpha0)));
  auto [psi3, inv3] = random_shear(rng, chart3());
  pairs.push_back(jacobi_from_contact(ContactData(pullback(psi3, alpha0))));
  auto [psi4, inv4] = random_shear(rng, chart4());
  pairs.push_back({poisson_from_symplectic(pullback(psi4, parse_form("d x1 ^ d y1 + d x2 ^ d y2", chart4()))),
                   MultiVectorField(chart4(), 1)});
  DifferentialForm w = parse_form("(1+x1^2)*d x1 ^ d y1 + (1+x1^2)*d x2 ^ d y2", chart4());
  pairs.push_back(jacobi_from_lcs({w, *lee_form(w)}));
  return pairs;
}
}  // namespace

SuiteResult jacobi_algebra_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);
  SuiteResult res;
  std::vector<JacobiPair> pairs = certified_pairs(seed);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!jacobi_check(pairs[i]).ok()) res.fail("pair " + std::to_string(i) + " is not certified");
  for (int n = 0; n < cases; ++n) {
    const JacobiPair& P = pairs[static_cast<std::size_t>(n) % pairs.size()];
    const ChartPtr& c = P.Lambda.chart();
    ScalarField f = random_rational_field(rng, c, 2, 2), g = random_rational_field(rng, c, 2, 2),
                h = random_polynomial_field(rng, c, 2, 2);
    ++res.cases;
    ScalarField fg = jacobi_bracket(P, f, g);
    if (fg != -jacobi_bracket(P, g, f)) res.fail("antisymmetry failed, case " + std::to_string(n));
    ScalarField jac = jacobi_bracket(P, f, jacobi_bracket(P, g, h)) + jacobi_bracket(P, g, jacobi_bracket(P, h, f)) +
                      jacobi_bracket(P, h, fg);
    if (!jac.is_zero()) res.fail("Jacobi identity failed, case " + std::to_string(n) + ": " + jac.str());
    if (!hamiltonian_relations_check(P, f, g).zero())
      res.fail("Hamiltonian relations failed, case " + std::to_string(n));
  }
  return res;
}

SuiteResult jet_suite(std::uint64_t seed, int cases) {
  Rng rng(seed);
  SuiteResult res;
  for (int n = 0; n < cases; ++n) {
    const int dim = rng.uniform(2, 6);
    Mat<Rational> b(dim, dim);
    Vec<Rational> theta(dim);
    for (int i = 0; i < dim; ++i) {
      theta(i) = random_rational(rng);
      b(i, i) = Rational(0);
      for (int j = i + 1; j < dim; ++j) {
        b(i, j) = random_rational(rng);
        b(j, i) = -b(i, j);
      }
    }
    ++res.cases;
    if (jet_D_theta(theta, jet_lift(b, theta)) != b) res.fail("D_theta(lift(b)) != b, dim " + std::to_string(dim));
  }
  // Symbolic 1-jets against d_theta at a point.
  for (int n = 0; n < cases / 4 + 1; ++n) {
    ChartPtr c = chart_of_dim(rng.uniform(2, 5));
    auto alpha = random_graded<DifferentialForm>(rng, c, 1, 2, 0.8);
    auto th = random_graded<DifferentialForm>(rng, c, 1, 2, 0.8);
    Point<Rational> p = random_points(rng, c, 1).front();
    ++res.cases;
    Mat<ScalarField> expected = antisymmetric_matrix(lichnerowicz_d(th, alpha));
    Mat<Rational> at(c->dim(), c->dim());
    for (int i = 0; i < c->dim(); ++i)
      for (int j = 0; j < c->dim(); ++j) at(i, j) = expected(i, j).evaluate<Rational>(p);
    if (jet_D_theta(covector_at(th, p), jet_at(alpha, p)) != at)
      res.fail("jet_D_theta disagrees with d_theta at a point, dim " + std::to_string(c->dim()));
  }
  return res;
}

SuiteResult lcs_example_check() {
  SuiteResult res;
  const ChartPtr c = chart4();
  DifferentialForm w = parse_form("(1+x1^2)*d x1 ^ d y1 + (1+x1^2)*d x2 ^ d y2", c);
  Classification k = classify_2form(w);
  ++res.cases;
  if (k.kind != Classification::Kind::LCS) {
    res.fail(std::string("classified as ") + to_string(k.kind));
    return res;
  }
  ++res.cases;
  if (*k.theta != parse_form("-2*x1/(1+x1^2)*d x1", c)) res.fail("Lee form is " + serialize(*k.theta));
  ++res.cases;
  if (!exterior_d(*k.theta).is_zero()) res.fail("Lee form is not closed");
  ++res.cases;
  if (!lichnerowicz_d(*k.theta, w).is_zero()) res.fail("d omega + theta ^ omega != 0");
  return res;
}

}  // namespace jforge::testing
