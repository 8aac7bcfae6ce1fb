#include <gtest/gtest.h>

#include <set>

#include "affgrass/partitions.hpp"
#include "oracle.hpp"

using namespace affgrass;

TEST(Partitions, CountsMatchRecursiveGenerator) {
  // p(m): 1 1 2 3 5 7 11 15 22 30 42
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int m = 0; m <= 10; ++m) {
    EXPECT_EQ(static_cast<int>(partitions_of(m).size()), expected[m]);
    auto a = partitions_of(m);
    auto b = oracle::partitions(m);
    EXPECT_EQ(std::set<Partition>(a.begin(), a.end()), std::set<Partition>(b.begin(), b.end()));
  }
}

TEST(Partitions, DistinctByFilter) {
  for (int m = 0; m <= 16; ++m) {
    std::set<Partition> want;
    for (const auto& p : oracle::partitions(m))
      if (std::adjacent_find(p.begin(), p.end()) == p.end()) want.insert(p);
    auto got = distinct_partitions_of(m);
    EXPECT_EQ(std::set<Partition>(got.begin(), got.end()), want) << m;
  }
}

TEST(Partitions, HooksAgainstArmLeg) {
  for (int m = 0; m <= 12; ++m)
    for (const auto& p : oracle::partitions(m)) {
      EXPECT_EQ(hooks(p), oracle::hooks(p));
      EXPECT_EQ(conjugate(p), oracle::conj(p));
      for (int n = 2; n <= 5; ++n) EXPECT_EQ(is_core(p, n), oracle::is_core(p, n));
    }
}

TEST(Partitions, HookGridExample) {
  // (4,3,1): first row hooks 6 4 3 1
  auto g = hook_grid({4, 3, 1});
  EXPECT_EQ(g[0], (std::vector<int>{6, 4, 3, 1}));
  EXPECT_EQ(g[1], (std::vector<int>{4, 2, 1}));
  EXPECT_EQ(g[2], (std::vector<int>{1}));
  EXPECT_EQ(count_below(hooks({4, 3, 1}), 3), 4);
}

TEST(Partitions, BoundaryWordRoundtrip) {
  for (int m = 0; m <= 12; ++m)
    for (const auto& p : partitions_of(m)) {
      auto w = psi(p);
      EXPECT_EQ(word_charge(w), 0);
      EXPECT_EQ(psi_inv(w), p);
    }
}

TEST(Partitions, HookPairsAreWordPairs) {
  for (const auto& p : partitions_of(9)) {
    auto pairs = hook_index_pairs(p);
    EXPECT_EQ(pairs.size(), static_cast<std::size_t>(weight(p)));
    auto w = psi(p);
    for (const auto& hp : pairs) {
      EXPECT_EQ(w.letter(hp.i), 1);
      EXPECT_EQ(w.letter(hp.j), 0);
      // diagonal position read from the word and from the diagram
      EXPECT_EQ(hp.above_word, hp.above_diagram);
    }
  }
}

TEST(Partitions, WordExamples) {
  auto w = psi({4, 4, 3, 2});
  std::string left, right;
  for (long k = -6; k < 0; ++k) left += char('0' + w.letter(k));
  for (long k = 0; k < 6; ++k) right += char('0' + w.letter(k));
  EXPECT_EQ(left + "|" + right, "001101|010011");
  auto one = hook_index_pairs({1});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].i, -1);
  EXPECT_EQ(one[0].j, 0);
  EXPECT_EQ(hook_index_pairs({5, 5, 3, 2}).size(), 15u);
  EXPECT_TRUE(hook_index_pairs({}).empty());
}

TEST(Partitions, ParseAndFormat) {
  EXPECT_EQ(parse_partition("4,4,3,2"), (Partition{4, 4, 3, 2}));
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_EQ(parse_partition("3,1,0"), (Partition{3, 1}));
  EXPECT_THROW(parse_partition("1,3"), std::invalid_argument);
  EXPECT_THROW(parse_partition("2,x"), std::invalid_argument);
  EXPECT_EQ(format_partition({3, 1}), "(3,1)");
}

TEST(Partitions, SymmetricFamiliesFromFrobenius) {
  // dd: (lb_i | lb_i - 1), sc: (lb_i - 1 | lb_i - 1), ddtr = conjugate of dd
  for (int m = 1; m <= 12; ++m)
    for (const auto& lb : distinct_partitions_of(m)) {
      Partition dd = double_distinct(lb), sc = sc_from_distinct(lb), tr = ddtr_from_distinct(lb);
      EXPECT_EQ(weight(dd), 2 * m);
      EXPECT_EQ(weight(sc), 2 * m - static_cast<int>(lb.size()));
      EXPECT_EQ(oracle::conj(sc), sc);
      EXPECT_EQ(oracle::conj(dd), tr);
      EXPECT_EQ(distinct_from_dd(dd), lb);
      EXPECT_EQ(distinct_from_sc(sc), lb);
      EXPECT_EQ(distinct_from_ddtr(tr), lb);
      EXPECT_TRUE(is_dd(dd) && is_sc(sc) && is_ddtr(tr));
      EXPECT_TRUE(is_dd_word(dd) && is_sc_word(sc) && is_ddtr_word(tr));
      EXPECT_EQ(hooks(dd), dd_hook_multiset(lb));
    }
}

TEST(Partitions, FamilyPredicatesAgreeWithWordForms) {
  for (int m = 0; m <= 11; ++m)
    for (const auto& p : partitions_of(m)) {
      EXPECT_EQ(is_sc(p), is_sc_word(p));
      EXPECT_EQ(is_dd(p), is_dd_word(p));
      EXPECT_EQ(is_ddtr(p), is_ddtr_word(p));
    }
}

TEST(Partitions, ShiftedHooks) {
  // shifted diagram of (3,1): rows 3,1 hooks 4,3,1 / 1 -> with lb_{j+1} extras
  auto h = shifted_hooks({3, 1});
  EXPECT_EQ(h.size(), 4u);
  EXPECT_EQ(lowered({3, 1}), (Partition{2}));
}

TEST(Partitions, MakePartitionRejectsIncreasing) {
  EXPECT_THROW(make_partition({1, 2}), std::invalid_argument);
  EXPECT_EQ(make_partition({2, 2, 0}), (Partition{2, 2}));
}
