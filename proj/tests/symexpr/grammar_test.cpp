#include <gtest/gtest.h>

#include "jforge/extcalc/calculus.hpp"
#include "jforge/extcalc/grammar.hpp"
#include "random_objects.hpp"

using namespace jforge;
using jforge::testing::Rng;

TEST(ParseScalar, Examples) {
  auto c = make_chart({"x", "y"});
  ScalarField f = parse_scalar("1/2*x^2 + y", c);
  ASSERT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num().size(), 2u);
  EXPECT_EQ(f.num().coefficient(Monomial::unit(0, 2)), Rational(1, 2));
  EXPECT_EQ(f.num().coefficient(Monomial::unit(1)), Rational(1));

  ScalarField g = parse_scalar("x/(1+x^2)", c);
  EXPECT_FALSE(g.is_polynomial());
  EXPECT_EQ(g.str(), "x/(x^2 + 1)");

  EXPECT_THROW(parse_scalar("x + q", c), UnknownCoordinate);
}

TEST(ParseScalar, SyntaxErrorsCarryColumn) {
  auto c = make_chart({"x", "y"});
  try {
    parse_scalar("x + * y", c);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_scalar("x y", c), ParseError);
  EXPECT_THROW(parse_scalar("(x + y", c), ParseError);
  EXPECT_THROW(parse_scalar("x ^ y", c), ParseError);
  EXPECT_THROW(parse_scalar("x $ y", c), ParseError);
  EXPECT_THROW(parse_scalar("", c), ParseError);
}

TEST(ParseGraded, FormsAndMultivectors) {
  auto c = make_chart({"x", "y", "z"});
  DifferentialForm a = parse_form("d z + x*d y", c);
  EXPECT_EQ(a.degree(), 1);
  EXPECT_EQ(a.coefficient({1}), ScalarField::coordinate(c, 0));
  DifferentialForm w = parse_form("(1+x^2)*d x ^ d y", c);
  EXPECT_EQ(w.degree(), 2);
  EXPECT_EQ(serialize(w), "(x^2 + 1)*d x ^ d y");
  MultiVectorField L = parse_multivector("@x ^ @y - x*@x ^ @z", c);
  EXPECT_EQ(L.degree(), 2);
  EXPECT_EQ(serialize(L), "@x ^ @y - x*@x ^ @z");
  EXPECT_EQ(serialize(parse_form("d y ^ d x", c)), "-d x ^ d y");
  EXPECT_THROW(parse_form("d x * d y", c), ParseError);
  EXPECT_THROW(parse_form("d x + d x ^ d y", c), ParseError);
  EXPECT_THROW(parse_form("d x ^ @y", c), ParseError);
  EXPECT_THROW(parse_form("d q", c), UnknownCoordinate);
}

TEST(ParseGraded, SymbolTableLookup) {
  auto c = make_chart({"x", "y", "z"});
  SymbolTable t;
  t.emplace("alpha", parse_form("d z + x*d y", c));
  DifferentialForm top = parse_form("alpha ^ d x ^ d y", c, &t);
  EXPECT_EQ(serialize(top), "d x ^ d y ^ d z");
}

TEST(Serialize, RoundTripRandomForms) {
  Rng rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    auto c = jforge::testing::chart_of_dim(rng.uniform(1, 4));
    int k = rng.uniform(0, c->dim());
    auto w = jforge::testing::random_graded<DifferentialForm>(rng, c, k, 2, 0.6, trial % 2 == 0);
    ASSERT_EQ(parse_form(serialize(w), c, nullptr, k), w) << serialize(w);
    auto A = jforge::testing::random_graded<MultiVectorField>(rng, c, k, 2, 0.6, trial % 3 == 0);
    ASSERT_EQ(parse_multivector(serialize(A), c, nullptr, k), A) << serialize(A);
    ScalarField f = jforge::testing::random_rational_field(rng, c);
    ASSERT_EQ(parse_scalar(serialize(f), c), f) << serialize(f);
  }
}
