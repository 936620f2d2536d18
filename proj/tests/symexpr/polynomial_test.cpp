#include <gtest/gtest.h>

#include "jforge/extcalc/grammar.hpp"
#include "random_objects.hpp"

using namespace jforge;
using jforge::testing::Rng;

namespace {
Polynomial P(const std::string& s, const ChartPtr& c) {
  ScalarField f = parse_scalar(s, c);
  EXPECT_TRUE(f.is_polynomial());
  return f.num();
}
}  // namespace

TEST(Polynomial, GradedLexLeadingTerm) {
  auto c = make_chart({"x", "y", "z"});
  Polynomial p = P("z^3 + x*y^2 + x^2*z", c);
  // Degree 3 ties broken lexicographically with x > y > z.
  EXPECT_EQ(p.str(), "x^2*z + x*y^2 + z^3");
}

TEST(Polynomial, ArithmeticIdentities) {
  auto c = make_chart({"x", "y"});
  Polynomial a = P("x + y", c), b = P("x - y", c);
  EXPECT_EQ(a * b, P("x^2 - y^2", c));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_EQ(P("x^2*y", c).derivative(0), P("2*x*y", c));
}

TEST(Polynomial, ExactDivision) {
  auto c = make_chart({"x"});
  EXPECT_EQ(exact_div(P("x^2 - 1", c), P("x - 1", c)), P("x + 1", c));
  EXPECT_FALSE(try_exact_div(P("x^2 + 1", c), P("x - 1", c)).has_value());
}

TEST(Polynomial, GcdSmallCases) {
  auto c = make_chart({"x", "y", "z"});
  EXPECT_EQ(gcd(P("x^2 - 1", c), P("x - 1", c)), P("x - 1", c));
  EXPECT_EQ(gcd(P("(x+y)^2*(x-z)", c), P("(x+y)*(x^2 - z*y)", c)), P("x + y", c));
  EXPECT_EQ(gcd(P("2*x*y^2", c), P("4*x^3*y", c)), P("x*y", c));
  EXPECT_EQ(gcd(P("x + 1", c), P("y + 1", c)), P("1", c));
  EXPECT_EQ(gcd(P("3*x + 3", c), P("0", c)), P("x + 1", c));
}

// Oracle: the gcd divides both inputs and the planted factor divides the gcd.
TEST(Polynomial, GcdRandomPlantedFactor) {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto c = jforge::testing::chart_of_dim(rng.uniform(1, 4));
    Polynomial g = jforge::testing::random_polynomial(rng, c, 2, 3);
    Polynomial a = jforge::testing::random_polynomial(rng, c, 2, 3);
    Polynomial b = jforge::testing::random_polynomial(rng, c, 2, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial ga = g * a, gb = g * b;
    Polynomial h = gcd(ga, gb);
    ASSERT_TRUE(try_exact_div(ga, h).has_value()) << ga.str() << " / " << h.str();
    ASSERT_TRUE(try_exact_div(gb, h).has_value());
    ASSERT_TRUE(try_exact_div(h, g).has_value()) << h.str() << " vs " << g.str();
    // Maximality: after removing h the cofactors are coprime.
    Polynomial r = gcd(exact_div(ga, h), exact_div(gb, h));
    ASSERT_TRUE(r.is_one()) << r.str();
  }
}

// Powers of shared factors times dense cofactors; pseudo-remainder sequences swell here.
TEST(Polynomial, GcdRepeatedFactors) {
  auto c = make_chart({"x", "y", "z"});
  Polynomial f1 = P("x - 3/4", c), f2 = P("y*z - 2", c);
  Polynomial cof = P("(x + y + z + 1)^4 + 3*x^2*y*z^3 - 5/7*x*z + 11", c);
  Polynomial a = f1 * f2.pow(2) * cof, b = f1.pow(2) * f2.pow(3);
  EXPECT_EQ(gcd(a, b), monic(f1 * f2.pow(2)));
  EXPECT_EQ(gcd(a.pow(2), b), monic(f1.pow(2) * f2.pow(3)));
  EXPECT_TRUE(gcd(cof, b).is_one());
}

TEST(Polynomial, GcdLargeRandomCofactors) {
  Rng rng(12);
  for (int trial = 0; trial < 15; ++trial) {
    auto c = jforge::testing::chart_of_dim(rng.uniform(2, 4));
    Polynomial g = jforge::testing::random_polynomial(rng, c, 3, 4);
    Polynomial a = jforge::testing::random_polynomial(rng, c, 4, 6);
    Polynomial b = jforge::testing::random_polynomial(rng, c, 4, 6);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Polynomial ga = g.pow(2) * a, gb = g * b.pow(2);
    Polynomial h = gcd(ga, gb);
    ASSERT_TRUE(try_exact_div(ga, h) && try_exact_div(gb, h));
    ASSERT_TRUE(try_exact_div(h, g).has_value());
    ASSERT_TRUE(gcd(exact_div(ga, h), exact_div(gb, h)).is_one());
  }
}
