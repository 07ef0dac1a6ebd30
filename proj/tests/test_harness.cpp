#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace testing_helpers;

namespace {

CheckSpec small(std::string_view id, std::uint64_t seed, int trials) {
  CheckSpec s = check_spec(id, seed);
  s.trials = std::min(s.trials, trials);
  s.dmax = std::min(s.dmax, std::max(s.dmin, 3));
  return s;
}

}  // namespace

TEST(Registry, CoversEveryResultOnce) {
  std::set<std::string_view> ids;
  for (const auto& e : kRegistry) ids.insert(e.id);
  EXPECT_EQ(ids.size(), kCoveredResults.size());
  for (const auto& id : kCoveredResults) EXPECT_NO_THROW(check_spec(id, 0));
  EXPECT_THROW(check_spec("NOPE", 0), std::invalid_argument);
}

TEST(Checks, DoubleWeightAndDimension) {
  const CheckReport dw = run_check(check_spec("DW", 0));
  EXPECT_TRUE(dw.passed());
  EXPECT_EQ(dw.instances, 13);
  EXPECT_EQ(dw.tallies.at("origin_double"), 5);  // d = 1, 4, 7, 10, 13
  EXPECT_TRUE(run_check(check_spec("DIM", 0)).passed());
}

TEST(Checks, EachPassesOnSmallRuns) {
  for (const auto& e : kRegistry) {
    const CheckReport r = run_check(small(e.id, 5, 8));
    EXPECT_TRUE(r.passed()) << e.id << ": " << (r.failures.empty() ? "no instances" : r.failures[0].trace);
  }
}

TEST(Checks, ZeroRBothCasesOccur) {
  const CheckReport r = run_check(small("DD0", 2, 10));
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.tallies.at("unique_point"), 0);
  EXPECT_GT(r.tallies.at("two_points"), 0);
}

TEST(Checks, DeterministicForFixedSeed) {
  for (const char* id : {"XDDD", "JOU", "SM"}) {
    const CheckReport a = run_check(small(id, 99, 6)), b = run_check(small(id, 99, 6));
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump()) << id;
  }
}

TEST(Checks, TimingOnlyWhenRequested) {
  const CheckReport r = run_check(check_spec("DIM", 0));
  EXPECT_FALSE(to_json(r).contains("elapsed_ms"));
  EXPECT_TRUE(to_json(r, true).contains("elapsed_ms"));
}

TEST(Checks, MutatedWeightsAreCaught) {
  ScopedWeightSignFlip flip;
  const CheckReport xddd = run_check(small("XDDD", 7, 10));
  EXPECT_FALSE(xddd.passed());
  const CheckReport sm = run_check(small("SM", 7, 20));
  EXPECT_FALSE(sm.passed());
}

TEST(Checks, ExceptionsBecomeFailures) {
  CheckSpec s = check_spec("DIM", 0);
  s.dmin = 0;
  s.dmax = 0;
  const CheckReport r = run_check(s);
  EXPECT_FALSE(r.passed());
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_NE(r.failures[0].trace.find("exception"), std::string::npos);
}

TEST(Checks, SeedsAreIndependentPerCheck) {
  EXPECT_NE(check_seed(0, 0), check_seed(0, 1));
  EXPECT_NE(check_seed(0, 0), check_seed(1, 0));
}
