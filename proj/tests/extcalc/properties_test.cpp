#include <gtest/gtest.h>

#include "suites.hpp"

using namespace jforge::testing;

TEST(SchoutenProperties, TheoremIdentitiesOnRandomMultivectors) {
  SuiteResult r = schouten_suite(101, 40);
  EXPECT_TRUE(r.ok()) << r.detail;
}

TEST(CalculusProperties, ExactIdentitiesOnRandomForms) {
  SuiteResult r = calculus_suite(202, 40);
  EXPECT_TRUE(r.ok()) << r.detail;
}

TEST(SchoutenProperties, CoordinateIndependenceUnderShears) {
  SuiteResult r = coordinate_independence_suite(303, 15);
  EXPECT_TRUE(r.ok()) << r.detail;
}
