#include "jforge/geomstruct/nondeg.hpp"

namespace jforge {

const char* to_string(NondegReport::Status s) {
  switch (s) {
    case NondegReport::Status::IdenticallyZero: return "identically_zero";
    case NondegReport::Status::VanishesAtSamples: return "vanishes_at_samples";
    case NondegReport::Status::NonvanishingAtSamples: return "nonvanishing_at_samples";
  }
  return "?";
}

NondegReport report_from_top(const ScalarField& top, Samples samples) {
  NondegReport r;
  r.top_power = top;
  r.identically_zero = top.is_zero();
  for (const Point<Rational>& p : samples) {
    bool ok = false;
    if (!r.identically_zero) {
      try {
        ok = !top.evaluate<Rational>(p).is_zero();
      } catch (const PoleError&) {
        ok = false;
      }
    }
    r.nonvanishing_at.push_back(ok);
    if (!ok) r.sample_failures.push_back(p);
  }
  return r;
}

NondegReport nondegeneracy_report(const DifferentialForm& omega, Samples samples) {
  if (omega.degree() != 2 && !omega.is_zero()) throw DomainError("nondegeneracy needs a 2-form");
  if (omega.dim() % 2) throw DomainError("odd ambient dimension");
  DifferentialForm top = wedge_power(omega, omega.dim() / 2);
  return report_from_top(omega.is_zero() ? ScalarField() : top_coefficient(top), samples);
}

ContactReport is_contact(const DifferentialForm& alpha, Samples samples) {
  if (alpha.degree() != 1 && !alpha.is_zero()) throw DomainError("contact test needs a 1-form");
  if (alpha.dim() % 2 == 0) throw DomainError("contact forms need odd dimension");
  const int n = (alpha.dim() - 1) / 2;
  DifferentialForm top = wedge(alpha, wedge_power(exterior_d(alpha), n));
  ScalarField c = top.degree() == top.dim() ? top_coefficient(top) : ScalarField();
  return {report_from_top(c, samples), std::move(top)};
}

}  // namespace jforge
