#include <gtest/gtest.h>

#include "suites.hpp"

using namespace jforge::testing;

TEST(ContactCore, CanonicalExample) {
  SuiteResult r = contact_core_check();
  EXPECT_TRUE(r.ok()) << r.detail;
}

TEST(Dichotomy, RoundTripsOnPullbacks) {
  SuiteResult r = dichotomy_suite(404, 4);
  EXPECT_TRUE(r.ok()) << r.detail;
}

TEST(JacobiAlgebra, BracketIdentities) {
  SuiteResult r = jacobi_algebra_suite(505, 12);
  EXPECT_TRUE(r.ok()) << r.detail;
}

TEST(Jets, LiftIsRightInverse) {
  SuiteResult r = jet_suite(606, 40);
  EXPECT_TRUE(r.ok()) << r.detail;
}

TEST(Classify, LcsExample) {
  SuiteResult r = lcs_example_check();
  EXPECT_TRUE(r.ok()) << r.detail;
}
