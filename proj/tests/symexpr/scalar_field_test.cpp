#include <gtest/gtest.h>

#include "jforge/extcalc/grammar.hpp"
#include "random_objects.hpp"

using namespace jforge;
using jforge::testing::Rng;

namespace {
ScalarField S(const std::string& s, const ChartPtr& c) { return parse_scalar(s, c); }
}  // namespace

TEST(ScalarArith, Examples) {
  auto c = make_chart({"x", "y"});
  EXPECT_TRUE((S("x", c) + S("-x", c)).is_zero());
  EXPECT_TRUE((S("1/(1+x^2)", c) * S("1+x^2", c)).is_one());
  ScalarField q = S("x^2-1", c) / S("x-1", c);
  EXPECT_EQ(q, S("x+1", c));
  EXPECT_TRUE(q.is_polynomial());
  EXPECT_THROW(S("x", c) / S("x - x", c), DivisionByZero);
  EXPECT_THROW(S("x", c) + S("a", make_chart({"a", "b"})), ChartMismatch);
}

TEST(ScalarArith, CanonicalDenominatorIsMonic) {
  auto c = make_chart({"x", "y"});
  ScalarField f = S("(2*x)/(4*y - 6*x)", c);
  EXPECT_TRUE(f.den().leading().c.is_one());
  EXPECT_EQ(f, S("x/(2*y - 3*x)", c));
  EXPECT_EQ(f, S("-x/(3*x - 2*y)", c));
}

TEST(PartialDerivative, Examples) {
  auto c = make_chart({"x", "y"});
  EXPECT_EQ(S("x^2*y", c).partial(0), S("2*x*y", c));
  EXPECT_TRUE(S("x", c).partial(1).is_zero());
  EXPECT_THROW(S("x", c).partial(2), DomainError);
}

// Quotient rule oracle: -2x/(1+x^2)^2 expanded by hand, plus a finite difference.
TEST(PartialDerivative, QuotientRuleOracle) {
  auto c = make_chart({"x"});
  ScalarField d = S("1/(1+x^2)", c).partial(0);
  EXPECT_EQ(d, S("-2*x/(x^4 + 2*x^2 + 1)", c));
  const double h = 1e-6, x0 = 0.7;
  double fd = (1.0 / (1 + (x0 + h) * (x0 + h)) - 1.0 / (1 + (x0 - h) * (x0 - h))) / (2 * h);
  std::vector<double> p{x0};
  EXPECT_NEAR(d.evaluate<double>(std::span<const double>(p)), fd, 1e-8);
}

TEST(Evaluate, Examples) {
  auto c = make_chart({"x", "y"});
  Point<Rational> p(c, Vec<Rational>{{Rational(1), Rational(2)}});
  EXPECT_EQ(S("x+y", c).evaluate(p), Rational(3));
  EXPECT_EQ(S("1/(1+x^2)", c).evaluate(p), Rational(1, 2));
  Point<Rational> origin(c, Vec<Rational>{{Rational(0), Rational(0)}});
  EXPECT_THROW(S("1/x", c).evaluate(origin), PoleError);
}

TEST(ScalarProperties, FieldAxiomsOnRandomTriples) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = jforge::testing::chart_of_dim(rng.uniform(1, 3));
    ScalarField a = jforge::testing::random_rational_field(rng, c);
    ScalarField b = jforge::testing::random_rational_field(rng, c);
    ScalarField e = jforge::testing::random_rational_field(rng, c);
    ASSERT_EQ((a + b) + e, a + (b + e));
    ASSERT_EQ((a * b) * e, a * (b * e));
    ASSERT_EQ(a * (b + e), a * b + a * e);
    if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(ScalarProperties, MixedPartialsCommute) {
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    auto c = jforge::testing::chart_of_dim(rng.uniform(2, 3));
    ScalarField f = jforge::testing::random_rational_field(rng, c);
    for (int i = 0; i < c->dim(); ++i)
      for (int j = 0; j < c->dim(); ++j) ASSERT_EQ(f.partial(i).partial(j), f.partial(j).partial(i));
  }
}

TEST(ScalarProperties, EvaluationIsRingHomomorphism) {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = jforge::testing::chart_of_dim(2);
    ScalarField a = jforge::testing::random_rational_field(rng, c);
    ScalarField b = jforge::testing::random_rational_field(rng, c);
    ScalarField e = jforge::testing::random_rational_field(rng, c);
    Point<Rational> p(c, Vec<Rational>{{jforge::testing::random_rational(rng), jforge::testing::random_rational(rng)}});
    try {
      Rational lhs = (a * b + e).evaluate(p);
      ASSERT_EQ(lhs, a.evaluate(p) * b.evaluate(p) + e.evaluate(p));
    } catch (const PoleError&) {
    }
  }
}

TEST(ScalarProperties, CanonicalFormIdempotent) {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = jforge::testing::chart_of_dim(3);
    ScalarField f = jforge::testing::random_rational_field(rng, c);
    ScalarField once = canonicalize(f);
    ASSERT_EQ(once, f);
    ASSERT_EQ(canonicalize(once), once);
    ASSERT_TRUE(gcd(f.num(), f.den()).is_one() || f.is_zero());
  }
}
