#include <gtest/gtest.h>

#include "jforge/errors.hpp"
#include "jforge/symexpr/rational.hpp"

using jforge::Rational;

TEST(Rational, LowestTermsWithPositiveDenominator) {
  Rational q(6, -4);
  EXPECT_EQ(q.num(), -3);
  EXPECT_EQ(q.den(), 2);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-10/4").str(), "-5/2");
  EXPECT_EQ(Rational::parse("7").str(), "7");
  EXPECT_THROW(Rational::parse("1/0"), jforge::DivisionByZero);
  EXPECT_THROW(Rational::parse("abc"), jforge::ParseError);
}

TEST(Rational, ArithmeticAndOrder) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_LT(b, a);
  EXPECT_THROW(a / Rational(0), jforge::DivisionByZero);
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(Rational, LongDoubleConversionKeepsExtendedPrecision) {
  Rational third(1, 3);
  long double v = third.to_long_double();
  EXPECT_NEAR(static_cast<double>(v * 3.0L - 1.0L), 0.0, 1e-18);
}
