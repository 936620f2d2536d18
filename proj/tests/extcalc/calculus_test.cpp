#include <gtest/gtest.h>

#include "jforge/extcalc/calculus.hpp"
#include "jforge/extcalc/grammar.hpp"
#include "jforge/extcalc/polymap.hpp"

using namespace jforge;

namespace {
ChartPtr R3() {
  static ChartPtr c = make_chart({"x", "y", "z"});
  return c;
}
DifferentialForm F(const std::string& s, const ChartPtr& c = R3()) { return parse_form(s, c); }
MultiVectorField V(const std::string& s, const ChartPtr& c = R3()) { return parse_multivector(s, c); }
ScalarField S(const std::string& s, const ChartPtr& c = R3()) { return parse_scalar(s, c); }
}  // namespace

TEST(Wedge, Examples) {
  EXPECT_EQ(wedge(F("d x"), F("d y")), F("d x ^ d y"));
  EXPECT_EQ(wedge(F("d y"), F("d x")), -F("d x ^ d y"));
  // (dz + x dy) ^ dx ^ dy: dz moves past two factors, x dy ^ dx ^ dy dies.
  EXPECT_EQ(wedge(F("d z + x*d y"), F("d x ^ d y")), F("d x ^ d y ^ d z"));
  EXPECT_EQ(serialize(wedge(F("d z + x*d y"), F("d x ^ d y"))), "d x ^ d y ^ d z");
  EXPECT_TRUE(wedge(F("d x ^ d y"), F("d x ^ d z")).is_zero());
  EXPECT_THROW(wedge(F("d x"), F("d a", make_chart({"a"}))), ChartMismatch);
}

TEST(ExteriorD, Examples) {
  EXPECT_EQ(exterior_d(F("x*d y")), F("d x ^ d y"));
  EXPECT_EQ(exterior_d(F("d z + x*d y")), F("d x ^ d y"));
  EXPECT_TRUE(exterior_d(F("d x ^ d y")).is_zero());
  EXPECT_EQ(exterior_d(F("d x ^ d y ^ d z")).degree(), 4);
}

TEST(InteriorProduct, Examples) {
  EXPECT_EQ(interior_product(V("@x"), F("d x ^ d y")), F("d y"));
  EXPECT_EQ(interior_product(V("@z"), F("d z + x*d y")), F("1"));
  EXPECT_TRUE(interior_product(V("@y - x*@z"), F("d z + x*d y")).is_zero());
  EXPECT_THROW(interior_product(V("@x"), F("x")), DomainError);
}

TEST(LieDerivative, Examples) {
  EXPECT_EQ(lie_derivative(V("@x"), F("x*d y")), F("d y"));
  EXPECT_TRUE(lie_derivative(V("@z"), F("d z + x*d y")).is_zero());
  EXPECT_EQ(lie_derivative(V("@x"), F("x^2")), F("2*x"));
}

TEST(Pullback, Examples) {
  auto c = make_chart({"x", "y"});
  PolyMap phi(c, c, {S("x + y^2", c), S("y", c)});
  EXPECT_EQ(pullback(phi, F("d x ^ d y", c)), F("d x ^ d y", c));
  EXPECT_EQ(pullback(phi, F("d x", c)), F("d x + 2*y*d y", c));
  EXPECT_EQ(pullback(PolyMap::identity(c), F("x*y*d x + d y", c)), F("x*y*d x + d y", c));
  PolyMap constant(c, c, {S("3", c), S("1/2", c)});
  EXPECT_TRUE(pullback(constant, F("d x", c)).is_zero());
}

TEST(Lichnerowicz, Examples) {
  EXPECT_EQ(lichnerowicz_d(F("d x"), F("d y")), F("d x ^ d y"));
  DifferentialForm w = F("x*y*d z");
  EXPECT_EQ(lichnerowicz_d(DifferentialForm(R3(), 1), w), exterior_d(w));
  // d_theta^2 alpha = d theta ^ alpha, expanded by hand: d(x dy) ^ dz.
  DifferentialForm theta = F("x*d y"), alpha = F("d z");
  EXPECT_EQ(lichnerowicz_d(theta, lichnerowicz_d(theta, alpha)), F("d x ^ d y ^ d z"));
}

TEST(Schouten, Examples) {
  EXPECT_EQ(schouten_bracket(V("@x"), V("x*@y")), V("@y"));
  EXPECT_TRUE(schouten_bracket(V("@x ^ @y"), V("@x ^ @y")).is_zero());
  EXPECT_EQ(schouten_bracket(V("@x"), V("x^2")), V("2*x"));
  EXPECT_EQ(schouten_bracket(V("x"), V("y")).degree(), 0);
}

TEST(Schouten, ContactBivectorAgainstJacobiator) {
  // [L,L](dx,dy,dz) = 2 * Jacobiator of {f,g} = L(df,dg) on coordinates.
  MultiVectorField L = V("@x ^ @y - x*@x ^ @z");
  auto br = [&](const ScalarField& f, const ScalarField& g) {
    return mv_pairing(L, gradient(f, R3()), gradient(g, R3()));
  };
  ScalarField x = S("x"), y = S("y"), z = S("z");
  ScalarField jac = br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y));
  MultiVectorField LL = schouten_bracket(L, L);
  EXPECT_EQ(LL.coefficient({0, 1, 2}), ScalarField(2) * jac);
  EXPECT_EQ(LL, V("-2*@x ^ @y ^ @z"));
}

TEST(Pairing, Examples) {
  MultiVectorField P = V("@x ^ @y");
  EXPECT_EQ(sharp(P, F("d x")), V("@y"));
  EXPECT_EQ(mv_pairing(P, F("d x"), F("d y")), S("1"));
  MultiVectorField L = V("@x ^ @y - x*@x ^ @z");
  EXPECT_TRUE(sharp(L, F("d z + x*d y")).is_zero());
}
