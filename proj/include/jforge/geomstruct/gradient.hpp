#pragma once

#include <vector>

#include "jforge/geomstruct/contact.hpp"

namespace jforge {

struct GradientFrame {
  std::vector<MultiVectorField> frame;  // horizontal parts of the contact Hamiltonian fields
  Mat<ScalarField> pairing;             // d alpha(frame_i, frame_j)
  NondegReport report;                  // top_power = q! Pf(pairing)
  bool symplectic() const { return report.nondegenerate(); }
};

// f holds 2q functions with 2q < dim.
GradientFrame contact_gradient_frame(const ContactData& C, const std::vector<ScalarField>& f, Samples samples = {});

}  // namespace jforge
