#include <gtest/gtest.h>

#include <numeric>

#include "affgrass/charges.hpp"
#include "affgrass/littlewood.hpp"
#include "oracle.hpp"

using namespace affgrass;

TEST(Charges, WeightFormulaIsBoxCount) {
  for (int n = 2; n <= 6; ++n)
    for (int m = 0; m <= 18; ++m)
      for (const auto& p : oracle::partitions(m)) {
        if (!oracle::is_core(p, n)) continue;
        Charge c = phi(p, n);
        EXPECT_EQ(std::accumulate(c.begin(), c.end(), 0L), 0);
        EXPECT_EQ(weight_from_charge(c), Int(m));
        EXPECT_EQ(phi_inv(c), p);
      }
}

TEST(Charges, SixCoreExample) {
  Partition c{10, 6, 6, 4, 3, 3, 1, 1, 1, 1};
  EXPECT_EQ(phi(c, 6), (Charge{1, -1, -2, 2, 1, -1}));
  // box count 36; the formula must agree
  EXPECT_EQ(oracle::size(c), 36);
  EXPECT_EQ(weight_from_charge(phi(c, 6)), Int(36));
}

TEST(Charges, RejectsBadInput) {
  EXPECT_THROW(phi({2}, 2), std::invalid_argument);
  EXPECT_THROW(phi_inv({1, 0}), std::invalid_argument);
}

TEST(Charges, BetaIsShiftedCharge) {
  // (3,2,1), n = 4
  auto b = beta_from_residues({3, 2, 1}, 4);
  auto m = phi({3, 2, 1}, 4);
  EXPECT_EQ(charge_from_beta(b), m);
  for (int n = 2; n <= 5; ++n)
    for (int s = 0; s <= 14; ++s)
      for (const auto& p : partitions_of(s)) {
        if (!is_core(p, n)) continue;
        auto beta = beta_from_residues(p, n);
        EXPECT_EQ(charge_from_beta(beta), phi(p, n));
        // a_i are the residue counts
        auto a = a_from_beta(beta);
        auto res = residue_counts(p, n);
        for (int i = 0; i < n; ++i) EXPECT_EQ(a[i], res[i]);
      }
}

TEST(Charges, SymmetricCorePatterns) {
  for (int n = 3; n <= 7; ++n)
    for (int s = 0; s <= 20; ++s)
      for (const auto& p : partitions_of(s)) {
        if (!is_core(p, n)) continue;
        if (is_sc(p)) {
          auto r = sc_charge_check(p, n);
          EXPECT_TRUE(r.charge_pattern);
          EXPECT_EQ(r.weight_formula, Int(s));
        }
        if (is_dd(p)) {
          auto r = dd_charge_check(p, n);
          EXPECT_TRUE(r.charge_pattern);
          EXPECT_EQ(r.weight_formula, Int(s));
        }
      }
}

TEST(Charges, ConjugateDoubledQuotientShape) {
  // whenever the quotient pattern holds, the fitted weight formula gives |lb|
  for (int N : {4, 5, 6, 7, 8})
    for (bool square : {false, true}) {
      if (square && N % 2) continue;
      int members = 0;
      for (int s = 1; s <= 16; ++s)
        for (const auto& lb : distinct_partitions_of(s)) {
          auto r = ddprime_quotient_shape(lb, N, square);
          if (!r.member) continue;
          ++members;
          EXPECT_EQ(r.weight_formula, Rational(s)) << format_partition(lb) << " N=" << N;
        }
      EXPECT_GT(members, 0);
    }
}
