#include <gtest/gtest.h>

#include "mukade/regression.hpp"

using namespace mukade;

namespace {

void expect_pass(const SuiteReport& r) {
  EXPECT_FALSE(r.checks.empty()) << r.suite;
  for (auto& c : r.checks) EXPECT_TRUE(c.ok) << r.suite << ": " << c.name << " " << c.detail;
}

SuiteConfig small(int level) {
  SuiteConfig c;
  c.level = level;
  return c;
}

}  // namespace

TEST(Suites, NormsAndSingular) {
  expect_pass(norms_suite(small(1)));
  expect_pass(singular_suite(SuiteConfig{}));
}

TEST(Suites, KacLowLevels) { expect_pass(kac_suite(small(2))); }

TEST(Suites, ScreenedAndHyperLowDegree) {
  expect_pass(screened_suite(small(1)));
  expect_pass(hyper_suite(small(1)));
  expect_pass(hyper_numeric_suite(SuiteConfig{}));
}

TEST(Suites, PropertiesLevelOne) { expect_pass(property_suite(small(1))); }

TEST(Suites, TrivialBoundsOnlyIdentityChecks) {
  auto r = alpha_suite(small(0));
  EXPECT_TRUE(r.checks.empty());
  auto f = factorization_suite(small(0));
  EXPECT_EQ(f.checks.size(), 2u);
  expect_pass(f);
}

TEST(Suites, ElementSuiteFlagsOnlyTheN2Fixture) {
  auto r = element_suite(SuiteConfig{});
  int red = 0;
  for (auto& c : r.checks)
    if (!c.ok) {
      ++red;
      EXPECT_EQ(c.name.rfind("f2_N2:", 0), 0u) << c.name;
    }
  EXPECT_EQ(red, 15);
}
