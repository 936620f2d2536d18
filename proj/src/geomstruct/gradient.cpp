#include "jforge/geomstruct/gradient.hpp"

#include "jforge/geomstruct/linsolve.hpp"

namespace jforge {

GradientFrame contact_gradient_frame(const ContactData& C, const std::vector<ScalarField>& f, Samples samples) {
  const int m = static_cast<int>(f.size());
  if (m % 2) throw DomainError("contact gradient needs an even number of functions");
  if (m >= C.dim()) throw DomainError("too many functions for the contact distribution");
  GradientFrame out;
  for (const ScalarField& h : f) out.frame.push_back(horizontal_part(C, contact_hamiltonian(C, h)));
  out.pairing.resize(m, m);
  for (int i = 0; i < m; ++i) {
    out.pairing(i, i) = ScalarField(0);
    DifferentialForm ix = interior_product(out.frame[static_cast<std::size_t>(i)], C.d_alpha());
    for (int j = i + 1; j < m; ++j) {
      out.pairing(i, j) = ix.is_zero() ? ScalarField(0) : pair(ix, out.frame[static_cast<std::size_t>(j)]);
      out.pairing(j, i) = -out.pairing(i, j);
    }
  }
  ScalarField top = pfaffian(out.pairing);
  for (int k = 2; k <= m / 2; ++k) top = ScalarField(k) * top;
  out.report = report_from_top(top, samples);
  return out;
}

}  // namespace jforge
