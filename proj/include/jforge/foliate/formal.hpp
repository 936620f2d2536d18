#pragma once

#include <vector>

#include "jforge/extcalc/polymap.hpp"
#include "jforge/geomstruct/contact.hpp"

namespace jforge {

struct FormalSolution {
  bool surjective = false;
  int intersection_dim = -1;  // dim(ker L ∩ ker alpha_x)
  bool symplectic = false;    // d'alpha nondegenerate on the intersection
  bool ok() const { return surjective && symplectic; }
};

// L is a 2q x dim matrix at the point x. Exact over Q.
FormalSolution formal_solution_check(const ContactData& C, const Mat<Rational>& L, const Point<Rational>& x);
// Floating samples; ranks use a relative tolerance of 1e-9.
FormalSolution formal_solution_check(const ContactData& C, const Mat<long double>& L,
                                     const Point<long double>& x);

// formal_solution_check applied to df at each sample.
std::vector<bool> map_transversality_report(const ContactData& C, const PolyMap& f, Samples samples);

}  // namespace jforge
