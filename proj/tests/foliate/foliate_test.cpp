#include <gtest/gtest.h>

#include "jforge/extcalc/grammar.hpp"
#include "jforge/foliate/foliate.hpp"
#include "jforge/foliate/formal.hpp"
#include "jforge/geomstruct/classify.hpp"
#include "suites.hpp"

using namespace jforge;

namespace {
ChartPtr R3() {
  static ChartPtr c = make_chart({"x", "y", "z"});
  return c;
}
}  // namespace

TEST(ProductChart, Layout) {
  auto pc = make_product_chart({"t"}, {"x", "y"});
  EXPECT_EQ(pc->q(), 1);
  EXPECT_EQ(pc->leaf_dim(), 2);
  EXPECT_EQ(pc->chart()->name(0), "t");
  EXPECT_THROW(make_product_chart({"x"}, {"x", "y"}), std::exception);
}

TEST(LeafRestrict, Examples) {
  auto pc = make_product_chart({"t"}, {"x", "y"});
  const ChartPtr& c = pc->chart();
  EXPECT_EQ(leaf_restrict(pc, parse_form("x*d x ^ d y + d t ^ d x", c)), parse_foliated("x*d x ^ d y", pc));
  FoliatedForm f = parse_foliated("t*x*d y", pc);
  EXPECT_EQ(leaf_restrict(pc, f.form()), f);
  EXPECT_TRUE(leaf_restrict(pc, parse_form("d t", c)).is_zero());
  EXPECT_THROW(parse_foliated("d t + d x", pc), DomainError);
}

TEST(FoliatedD, Examples) {
  auto pc = make_product_chart({"t"}, {"y", "z"});
  EXPECT_EQ(d_F(parse_foliated("t*y", pc)), parse_foliated("t*d y", pc));
  FoliatedForm w = parse_foliated("t^2*y*d z + z*d y", pc);
  EXPECT_TRUE(d_F(d_F(w)).is_zero());
  EXPECT_EQ(d_F(w), parse_foliated("(t^2 - 1)*d y ^ d z", pc));
}

TEST(FoliatedD, PropertySuite) {
  auto r = jforge::testing::foliated_calculus_suite(707, 40);
  EXPECT_TRUE(r.ok()) << r.detail;
}

TEST(FoliatedClassify, Examples) {
  auto pc3 = make_product_chart({"t"}, {"x", "y", "z"});
  auto c = foliated_classify(parse_foliated("d z + x*d y", pc3), std::nullopt);
  EXPECT_EQ(c.kind, FoliatedClassification::Kind::FoliatedContact);
  EXPECT_EQ(c.report.top_power, ScalarField(1));

  auto pc2 = make_product_chart({"t"}, {"x", "y"});
  FoliatedForm w = parse_foliated("(1+t^2)*d x ^ d y", pc2);
  EXPECT_FALSE(exterior_d(w.form()).is_zero());
  EXPECT_EQ(foliated_classify(std::nullopt, w).kind, FoliatedClassification::Kind::FoliatedSymplectic);

  auto pc4 = make_product_chart({"t"}, {"x1", "y1", "x2", "y2"});
  EXPECT_EQ(foliated_classify(std::nullopt, parse_foliated("d x1 ^ d y1", pc4)).kind,
            FoliatedClassification::Kind::None);
  EXPECT_THROW(foliated_classify(parse_foliated("d x", pc2), std::nullopt), DomainError);
  EXPECT_THROW(foliated_classify(std::nullopt, parse_foliated("d x ^ d y", pc3)), DomainError);
}

TEST(FoliatedClassify, LcsAndAlmostContact) {
  auto pc4 = make_product_chart({"t"}, {"x1", "y1", "x2", "y2"});
  auto lcs = foliated_classify(std::nullopt, parse_foliated("(1+x1^2+t^2)*d x1 ^ d y1 + (1+x1^2+t^2)*d x2 ^ d y2", pc4));
  ASSERT_EQ(lcs.kind, FoliatedClassification::Kind::FoliatedLCS);
  EXPECT_EQ(*lcs.theta, parse_foliated("-2*x1/(1+x1^2+t^2)*d x1", pc4));

  auto pc3 = make_product_chart({"t"}, {"x", "y", "z"});
  auto ac = foliated_classify(parse_foliated("d z", pc3), parse_foliated("(1+t^2)*d x ^ d y", pc3));
  EXPECT_EQ(ac.kind, FoliatedClassification::Kind::AlmostContact);
  auto fc = foliated_classify(parse_foliated("d z + x*d y", pc3), parse_foliated("d x ^ d y", pc3));
  EXPECT_EQ(fc.kind, FoliatedClassification::Kind::FoliatedContact);
}

TEST(FoliatedClassify, ReducesToAmbientWhenCodimensionZero) {
  auto pc = make_product_chart({}, {"x1", "y1", "x2", "y2"});
  const char* w = "(1+x1^2)*d x1 ^ d y1 + (1+x1^2)*d x2 ^ d y2";
  auto fol = foliated_classify(std::nullopt, parse_foliated(w, pc));
  auto amb = classify_2form(parse_form(w, pc->chart()));
  EXPECT_EQ(fol.kind, FoliatedClassification::Kind::FoliatedLCS);
  EXPECT_EQ(amb.kind, Classification::Kind::LCS);
  EXPECT_EQ(fol.theta->form(), *amb.theta);
  EXPECT_EQ(fol.report.top_power, amb.report.top_power);
}

TEST(FormalSolution, Examples) {
  ContactData C(parse_form("d z + x*d y", R3()));
  Vec<Rational> p(3);
  p << Rational(1, 2), Rational(-3), Rational(2);
  Point<Rational> x(R3(), p);
  Mat<Rational> L(2, 3);
  L << Rational(1), Rational(0), Rational(0), Rational(0), Rational(1), Rational(0);
  EXPECT_TRUE(formal_solution_check(C, L, x).ok());
  L << Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(1);
  FormalSolution bad = formal_solution_check(C, L, x);
  EXPECT_FALSE(bad.ok());
  EXPECT_TRUE(bad.surjective);
  EXPECT_EQ(bad.intersection_dim, 1);
  EXPECT_FALSE(formal_solution_check(C, Mat<Rational>::Constant(2, 3, Rational(0)), x).ok());
  EXPECT_THROW(formal_solution_check(C, Mat<Rational>::Constant(2, 2, Rational(0)), x), DomainError);

  Mat<long double> Ln(2, 3);
  Ln << 1, 0, 0, 0, 1, 0;
  Vec<long double> pn(3);
  pn << 0.5L, -3.0L, 2.0L;
  EXPECT_TRUE(formal_solution_check(C, Ln, Point<long double>(R3(), pn)).ok());
  Ln << 0, 1, 0, 0, 0, 1;
  EXPECT_FALSE(formal_solution_check(C, Ln, Point<long double>(R3(), pn)).ok());
}

TEST(FormalSolution, AgreesWithGradientFrame) {
  auto r = jforge::testing::transversality_suite(808, 25);
  EXPECT_TRUE(r.ok()) << r.detail;
}
