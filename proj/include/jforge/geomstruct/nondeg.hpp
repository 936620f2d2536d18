#pragma once

#include <span>
#include <vector>

#include "jforge/extcalc/calculus.hpp"

namespace jforge {

using Samples = std::span<const Point<Rational>>;

// Exact identically-zero test plus sampling at user points. A pole at a
// sample counts as a failure: nothing is certified there.
struct NondegReport {
  enum class Status { IdenticallyZero, VanishesAtSamples, NonvanishingAtSamples };

  ScalarField top_power;
  bool identically_zero = false;
  std::vector<Point<Rational>> sample_failures;
  std::vector<bool> nonvanishing_at;  // one entry per sample

  Status status() const {
    if (identically_zero) return Status::IdenticallyZero;
    return sample_failures.empty() ? Status::NonvanishingAtSamples : Status::VanishesAtSamples;
  }
  bool nondegenerate() const { return status() == Status::NonvanishingAtSamples; }
};

const char* to_string(NondegReport::Status s);

NondegReport report_from_top(const ScalarField& top, Samples samples);

// Top coefficient of w^m, dim = 2m.
NondegReport nondegeneracy_report(const DifferentialForm& omega, Samples samples = {});

struct ContactReport {
  NondegReport report;
  DifferentialForm top_form;  // alpha ^ (d alpha)^n
  bool contact() const { return report.nondegenerate(); }
};

ContactReport is_contact(const DifferentialForm& alpha, Samples samples = {});

}  // namespace jforge
