#include "jforge/geomstruct/jacobi.hpp"

#include <sstream>

#include "jforge/geomstruct/linsolve.hpp"

namespace jforge {

namespace {

MultiVectorField bivector_from_matrix(const ChartPtr& c, const Mat<ScalarField>& P) {
  MultiVectorField r(c, 2);
  for (int i = 0; i < P.rows(); ++i)
    for (int j = i + 1; j < P.cols(); ++j) r.add_sorted({i, j}, P(i, j));
  return r;
}

DifferentialForm two_form_from_matrix(const ChartPtr& c, const Mat<ScalarField>& P) {
  DifferentialForm r(c, 2);
  for (int i = 0; i < P.rows(); ++i)
    for (int j = i + 1; j < P.cols(); ++j) r.add_sorted({i, j}, P(i, j));
  return r;
}

void check_pair(const JacobiPair& P) {
  if (P.Lambda.degree() != 2 && !P.Lambda.is_zero()) throw DomainError("Lambda must be a bivector");
  if (P.E.degree() != 1 && !P.E.is_zero()) throw DomainError("E must be a vector field");
  if (!P.Lambda.same_space(P.E)) throw ChartMismatch();
}

MultiVectorField as_bivector(const MultiVectorField& L) { return L.is_zero() ? L.zero_like(2) : L; }
MultiVectorField as_vector(const MultiVectorField& E) { return E.is_zero() ? E.zero_like(1) : E; }

std::string point_str(const Point<Rational>& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.values.size(); ++i) os << (i ? ", " : "") << p.values(i).str();
  os << ")";
  return os.str();
}

}  // namespace

JacobiPair jacobi_from_contact(const ContactData& C) {
  const Mat<ScalarField>& Minv = C.phi_inverse_matrix();
  Mat<ScalarField> L = mat_mul(mat_mul(Minv.transpose(), C.d_alpha_matrix()), Minv);
  return {bivector_from_matrix(C.chart(), L), phi_inverse(C, C.alpha())};
}

JacobiPair jacobi_from_lcs(const LCSPair& p) {
  MultiVectorField L = inverse_bivector(p.omega);
  return {L, sharp(L, p.theta)};
}

JacobiCheck jacobi_check(const JacobiPair& P) {
  check_pair(P);
  MultiVectorField L = as_bivector(P.Lambda), E = as_vector(P.E);
  JacobiCheck r;
  MultiVectorField lhs = schouten_bracket(L, L);
  MultiVectorField rhs = wedge(E, L);
  r.bracket_ok = (lhs + ScalarField(2) * rhs).is_zero();
  r.invariance_ok = schouten_bracket(L, E).is_zero();
  return r;
}

ScalarField jacobi_bracket(const JacobiPair& P, const ScalarField& f, const ScalarField& g) {
  check_pair(P);
  const ChartPtr& c = P.Lambda.chart();
  MultiVectorField L = as_bivector(P.Lambda), E = as_vector(P.E);
  ScalarField r = mv_pairing(L, gradient(f, c), gradient(g, c));
  if (!E.is_zero()) r += f * directional(E, g) - g * directional(E, f);
  return r;
}

MultiVectorField jacobi_hamiltonian(const JacobiPair& P, const ScalarField& f) {
  check_pair(P);
  return sharp(as_bivector(P.Lambda), gradient(f, P.Lambda.chart()));
}

NondegJacobiStructure structure_from_nondeg_jacobi(const JacobiPair& P, Samples samples) {
  check_pair(P);
  const ChartPtr& c = P.Lambda.chart();
  const int n = P.Lambda.dim();
  Mat<ScalarField> L = antisymmetric_matrix(as_bivector(P.Lambda));
  Vec<ScalarField> E = components(as_vector(P.E));

  // Columns of L span Im Lambda^#; E is appended.
  Mat<ScalarField> D(n, n + 1);
  D.leftCols(n) = L;
  D.col(n) = E;
  if (rank_exact(D) < n) throw DomainError("degenerate characteristic distribution");
  for (const Point<Rational>& p : samples) {
    Mat<Rational> Dp(n, n + 1);
    try {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j) Dp(i, j) = D(i, j).evaluate<Rational>(p);
    } catch (const PoleError&) {
      throw DomainError("pole of the Jacobi pair at sample " + point_str(p));
    }
    if (rank_exact(Dp) < n) throw DomainError("degenerate characteristic distribution at sample " + point_str(p));
  }

  if (n % 2 == 0) {
    // omega(L^T a, L^T b) = a^T L b forces Omega = (L^{-1})^T, and L^T theta = E.
    Mat<ScalarField> Omega = inverse_exact(L, "bivector").transpose();
    LCSPair out{two_form_from_matrix(c, Omega), covector_from(c, mat_vec(Omega, E))};
    if (!is_lcs_pair(out)) throw DomainError("recovered pair is not locally conformal symplectic");
    return out;
  }
  // alpha(E) = 1 and alpha vanishes on Im Lambda^#.
  Mat<ScalarField> A(n + 1, n);
  Vec<ScalarField> b(n + 1);
  A.row(0) = E.transpose();
  b(0) = ScalarField(1);
  A.bottomRows(n) = L;
  for (int i = 0; i < n; ++i) b(i + 1) = ScalarField(0);
  DifferentialForm alpha = covector_from(c, solve_unique(A, b, "contact form from Jacobi pair"));
  if (is_contact(alpha).report.identically_zero) throw DomainError("recovered form is not contact");
  if (reeb_field(alpha) != as_vector(P.E)) throw DomainError("E is not the Reeb field of the recovered form");
  return alpha;
}

HamiltonianResiduals hamiltonian_relations_check(const JacobiPair& P, const ScalarField& f, const ScalarField& g) {
  check_pair(P);
  MultiVectorField E = as_vector(P.E);
  auto X = [&](const ScalarField& h) { return jacobi_hamiltonian(P, h); };
  const MultiVectorField Xf = X(f), Xg = X(g);
  const ScalarField Ef = directional(E, f), Eg = directional(E, g), fg = jacobi_bracket(P, f, g);
  const ScalarField lam = mv_pairing(as_bivector(P.Lambda), gradient(f, P.Lambda.chart()), gradient(g, P.Lambda.chart()));
  HamiltonianResiduals r;
  r.reeb_residual = schouten_bracket(E, Xf) - X(Ef);
  // From [X_f + fE, X_g + gE] = X_{f,g} + {f,g} E.
  MultiVectorField expected = X(fg) - f * X(Eg) + g * X(Ef) - lam * E;
  r.bracket_residual = schouten_bracket(Xf, Xg) - expected;
  return r;
}

}  // namespace jforge
