#include "jforge/geomstruct/classify.hpp"

#include "jforge/geomstruct/contact.hpp"
#include "jforge/geomstruct/linsolve.hpp"

namespace jforge {

const char* to_string(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::Symplectic: return "symplectic";
    case Classification::Kind::LCS: return "lcs";
    case Classification::Kind::Degenerate: return "degenerate";
    case Classification::Kind::NotConformallyClosed: return "not_conformally_closed";
  }
  return "?";
}

std::optional<DifferentialForm> lee_form(const DifferentialForm& omega) {
  const int n = omega.dim();
  const ChartPtr& c = omega.chart();
  DifferentialForm dw = exterior_d(omega);
  std::vector<IndexTuple> rows;
  std::vector<DifferentialForm> cols;
  std::map<IndexTuple, int> row_of;
  for (int i = 0; i < n; ++i) {
    cols.push_back(wedge(dx(c, i), omega));
    for (const auto& [k, v] : cols.back().terms())
      if (row_of.emplace(k, static_cast<int>(rows.size())).second) rows.push_back(k);
  }
  for (const auto& [k, v] : dw.terms())
    if (row_of.emplace(k, static_cast<int>(rows.size())).second) rows.push_back(k);
  const int m = static_cast<int>(rows.size());
  Mat<ScalarField> A(m, n);
  Vec<ScalarField> b(m);
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i < n; ++i) A(r, i) = cols[static_cast<std::size_t>(i)].coefficient(rows[static_cast<std::size_t>(r)]);
    b(r) = -dw.coefficient(rows[static_cast<std::size_t>(r)]);
  }
  if (m == 0) return DifferentialForm(c, 1);
  LinearSolution<ScalarField> s = solve_exact(A, b);
  if (s.status == LinearSolution<ScalarField>::Status::Inconsistent) return std::nullopt;
  // Wedge with a nondegenerate omega is injective on 1-forms in dim >= 4.
  if (!s.unique()) throw SingularSystem("Lee form is not unique");
  return covector_from(c, s.x);
}

Classification classify_2form(const DifferentialForm& omega, Samples samples) {
  if (omega.dim() % 2) throw DomainError("odd ambient dimension");
  if (omega.dim() < 2) throw DomainError("dimension must be at least 2");
  Classification out{Classification::Kind::Degenerate, std::nullopt, nondegeneracy_report(omega, samples)};
  if (!out.report.nondegenerate()) return out;
  if (exterior_d(omega).is_zero()) {
    out.kind = Classification::Kind::Symplectic;
    return out;
  }
  std::optional<DifferentialForm> theta = lee_form(omega);
  if (!theta || !exterior_d(*theta).is_zero()) {
    out.kind = Classification::Kind::NotConformallyClosed;
    return out;
  }
  out.kind = Classification::Kind::LCS;
  out.theta = std::move(theta);
  return out;
}

MultiVectorField inverse_bivector(const DifferentialForm& omega) {
  Mat<ScalarField> W = antisymmetric_matrix(omega);
  Mat<ScalarField> Binv = inverse_exact<ScalarField>(W.transpose(), "inverse of omega");
  Mat<ScalarField> P = mat_mul(mat_mul(Binv.transpose(), W), Binv);
  MultiVectorField pi(omega.chart(), 2);
  for (int i = 0; i < P.rows(); ++i)
    for (int j = i + 1; j < P.cols(); ++j) pi.add_sorted({i, j}, P(i, j));
  return pi;
}

MultiVectorField poisson_from_symplectic(const DifferentialForm& omega) {
  if (omega.degree() != 2) throw DomainError("expected a 2-form");
  if (!exterior_d(omega).is_zero()) throw DomainError("omega is not closed");
  if (nondegeneracy_report(omega).identically_zero) throw DomainError("omega is degenerate");
  return inverse_bivector(omega);
}

bool is_lcs_pair(const LCSPair& p) {
  if (p.omega.degree() != 2 || p.theta.degree() != 1) return false;
  if (!exterior_d(p.theta).is_zero()) return false;
  if (!lichnerowicz_d(p.theta, p.omega).is_zero()) return false;
  return !nondegeneracy_report(p.omega).identically_zero;
}

}  // namespace jforge
