#include <gtest/gtest.h>

#include "affgrass/littlewood.hpp"
#include "oracle.hpp"

using namespace affgrass;

TEST(Littlewood, GoldenExample) {
  auto d = decompose({4, 4, 3, 2}, 3);
  EXPECT_EQ(d.core, (Partition{1}));
  ASSERT_EQ(d.quotient.size(), 3u);
  EXPECT_EQ(d.quotient[0], (Partition{1, 1}));
  EXPECT_EQ(d.quotient[1], Partition{});
  EXPECT_EQ(d.quotient[2], (Partition{2}));
}

// abacus with a multiple of n beads, runners slid up for the core
TEST(Littlewood, MatchesAbacus) {
  for (int n = 2; n <= 5; ++n)
    for (int m = 0; m <= 13; ++m)
      for (const auto& p : oracle::partitions(m)) {
        auto d = decompose(p, n);
        auto a = oracle::abacus(p, n);
        EXPECT_EQ(d.core, a.core);
        EXPECT_EQ(d.quotient, a.quotient) << format_partition(p) << " n=" << n;
      }
}

TEST(Littlewood, RoundtripAndSize) {
  for (int n = 2; n <= 6; ++n)
    for (int m = 0; m <= 12; ++m)
      for (const auto& p : partitions_of(m)) {
        auto d = decompose(p, n);
        int q = 0;
        for (const auto& nu : d.quotient) q += weight(nu);
        EXPECT_EQ(weight(p), weight(d.core) + n * q);
        EXPECT_TRUE(oracle::is_core(d.core, n));
        EXPECT_EQ(compose(d.core, d.quotient), p);
        EXPECT_EQ(compose_from_shifts(d.shifts, d.quotient), p);
        EXPECT_EQ(core_from_shifts(d.shifts), d.core);
      }
}

TEST(Littlewood, DivisibleHooksAreScaledQuotientHooks) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& p : partitions_of(11)) EXPECT_EQ(divisible_hooks(p, n), scaled_quotient_hooks(p, n));
}

TEST(Littlewood, ComposeRejectsNonCore) {
  EXPECT_THROW(compose({2}, {{}, {}}), std::invalid_argument);
}

TEST(Littlewood, ConjugateDoubledDistinctRestriction) {
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 10; ++m)
      for (const auto& lb : distinct_partitions_of(m)) {
        auto r = ddtr_decompose_check(ddtr_from_distinct(lb), n);
        EXPECT_TRUE(r.all()) << format_partition(lb) << " n=" << n;
      }
  EXPECT_THROW(ddtr_decompose_check({2, 2}, 3), std::invalid_argument);
}

TEST(Littlewood, FloorHelpers) {
  EXPECT_EQ(floor_div(-1, 3), -1);
  EXPECT_EQ(floor_mod(-1, 3), 2);
  EXPECT_EQ(floor_div(7, 3), 2);
}
