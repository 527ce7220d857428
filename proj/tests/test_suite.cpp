#include <gtest/gtest.h>

#include "ncp/suite.hpp"

using namespace ncp;

TEST(Suite, DefaultRunIsGreen) {
  const SuiteSummary s = run_property_suite();
  EXPECT_EQ(s.seed, kDefaultSeed);
  EXPECT_EQ(s.batteries.size(), 13u);
  for (const auto& b : s.batteries) {
    EXPECT_TRUE(b.pass()) << b.name;
    EXPECT_GT(b.cases, 0) << b.name;
    for (const auto& f : b.failures) ADD_FAILURE() << b.name << ": " << f;
  }
  EXPECT_TRUE(s.pass());
  for (const char* name : {"brauer.constructor", "groupext.pairings", "groupext.cyclic-fiber-scan", "covers"})
    EXPECT_NE(s.find(name), nullptr) << name;
}

TEST(Suite, QuickRunSkipsScan) {
  const SuiteSummary s = run_property_suite(kDefaultSeed, SuiteSizes::quick());
  EXPECT_TRUE(s.pass());
  EXPECT_EQ(s.find("groupext.cyclic-fiber-scan"), nullptr);
}

TEST(Suite, DroppingTheGapIsCaught) {
  SuiteHooks hooks;
  hooks.d_value = mutants::d_value_without_gap;
  const SuiteSummary s = run_property_suite(kDefaultSeed, SuiteSizes::quick(), hooks);
  EXPECT_FALSE(s.pass());
  ASSERT_NE(s.find("brauer.constructor"), nullptr);
  EXPECT_FALSE(s.find("brauer.constructor")->pass());
  EXPECT_TRUE(s.find("groupext.pairings")->pass());
}

TEST(Suite, CocyclePairingIsCaught) {
  SuiteHooks hooks;
  hooks.beta = mutants::beta_as_cocycle;
  const SuiteSummary s = run_property_suite(kDefaultSeed, SuiteSizes::quick(), hooks);
  EXPECT_FALSE(s.pass());
  ASSERT_NE(s.find("groupext.pairings"), nullptr);
  EXPECT_FALSE(s.find("groupext.pairings")->pass());
  EXPECT_TRUE(s.find("brauer.constructor")->pass());
}

TEST(Suite, SameSeedSameResult) {
  for (std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{99}}) {
    const SuiteSummary a = run_property_suite(seed, SuiteSizes::quick());
    const SuiteSummary b = run_property_suite(seed, SuiteSizes::quick());
    ASSERT_EQ(a.batteries.size(), b.batteries.size());
    for (std::size_t i = 0; i < a.batteries.size(); ++i) {
      EXPECT_EQ(a.batteries[i].name, b.batteries[i].name);
      EXPECT_EQ(a.batteries[i].cases, b.batteries[i].cases);
      EXPECT_EQ(a.batteries[i].violations, b.batteries[i].violations);
    }
    EXPECT_EQ(a.seed, seed);
  }
}
