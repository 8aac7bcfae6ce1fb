#include <gtest/gtest.h>

#include "affgrass/affine_data.hpp"

using namespace affgrass;

namespace {

const CartanData& get(Kind k, int r) { return registry(make_type(k, r)); }

}  // namespace

// marks / comarks as tabulated
TEST(AffineData, TableConstants) {
  struct Row {
    Kind k;
    int rank;
    std::vector<int> marks, comarks;
  };
  const std::vector<Row> rows = {
      {Kind::A1, 3, {1, 1, 1}, {1, 1, 1}},
      {Kind::B1, 3, {1, 1, 2, 2}, {1, 1, 2, 1}},
      {Kind::B1, 4, {1, 1, 2, 2, 2}, {1, 1, 2, 2, 1}},
      {Kind::C1, 2, {1, 2, 1}, {1, 1, 1}},
      {Kind::C1, 3, {1, 2, 2, 1}, {1, 1, 1, 1}},
      {Kind::D1, 4, {1, 1, 2, 1, 1}, {1, 1, 2, 1, 1}},
      {Kind::A2odd, 3, {1, 1, 2, 1}, {1, 1, 2, 2}},
      {Kind::A2, 2, {2, 2, 1}, {1, 2, 2}},
      {Kind::A2p, 2, {1, 2, 2}, {2, 2, 1}},
      {Kind::D2, 2, {1, 1, 1}, {1, 2, 1}},
      {Kind::G21, 2, {1, 2, 3}, {1, 2, 1}},
      {Kind::D43, 2, {1, 2, 1}, {1, 2, 3}},
  };
  for (const auto& r : rows) {
    const auto& d = get(r.k, r.rank);
    EXPECT_EQ(d.marks, r.marks) << display_name(d.type);
    EXPECT_EQ(d.comarks, r.comarks) << display_name(d.type);
  }
}

TEST(AffineData, EtaValues) {
  EXPECT_EQ(get(Kind::B1, 3).eta, Rational(6));
  EXPECT_EQ(get(Kind::B1, 3).eta_dual, Rational(5));
  EXPECT_EQ(get(Kind::C1, 3).eta_dual, Rational(4));
  EXPECT_EQ(get(Kind::A2p, 2).eta_dual, Rational(5));
  EXPECT_EQ(get(Kind::A1, 4).eta_dual, Rational(4));
}

// marks span the kernel of A, comarks the kernel of A^T
TEST(AffineData, MarksAreNullVectors) {
  for (Kind k : all_kinds())
    for (int r = min_rank(k); r <= (fixed_rank(k) ? 2 : min_rank(k) + 2); ++r) {
      const auto& d = get(k, r);
      const int n = d.nodes();
      ASSERT_EQ(static_cast<int>(d.cartan.size()), n);
      for (int i = 0; i < n; ++i) {
        Rational row = 0, col = 0;
        for (int j = 0; j < n; ++j) {
          row += d.cartan[i][j] * d.marks[j];
          col += d.comarks[j] * d.cartan[j][i];
        }
        EXPECT_EQ(row, 0) << display_name(d.type);
        EXPECT_EQ(col, 0) << display_name(d.type);
        EXPECT_EQ(d.cartan[i][i], 2);
      }
    }
}

TEST(AffineData, DualSwapsMarksAndComarks) {
  for (Kind k : all_kinds()) {
    const int r = fixed_rank(k) ? 2 : std::max(min_rank(k), min_rank(dual_kind(k)));
    EXPECT_EQ(get(k, r).marks, get(dual_kind(k), r).comarks) << kind_flag(k);
  }
}

TEST(AffineData, PositiveRootCounts) {
  // |R+| of the finite part: A2 3, B3 9, C3 9, D4 12, G2 6
  EXPECT_EQ(get(Kind::A1, 3).positive_roots.size(), 3u);
  EXPECT_EQ(get(Kind::B1, 3).positive_roots.size(), 9u);
  EXPECT_EQ(get(Kind::C1, 3).positive_roots.size(), 9u);
  EXPECT_EQ(get(Kind::D1, 4).positive_roots.size(), 12u);
  EXPECT_EQ(get(Kind::G21, 2).positive_roots.size(), 6u);
  EXPECT_EQ(get(Kind::D43, 2).positive_roots.size(), 6u);
}

TEST(AffineData, RhoPairsToOneOnCoroots) {
  for (Kind k : all_kinds()) {
    const auto& d = get(k, fixed_rank(k) ? 2 : min_rank(k) + 1);
    for (const auto& a : d.simple_roots) EXPECT_EQ(2 * dot(d.rho, a) / dot(a, a), 1) << kind_flag(k);
  }
}

TEST(AffineData, PiTables) {
  // C: every box weighs 1; A'_{2n}: residue n weighs 2
  for (const auto& x : get(Kind::C1, 2).pi) EXPECT_EQ(x, 1);
  const auto& p = get(Kind::A2p, 2).pi;
  EXPECT_EQ(p[0], 1);
  EXPECT_EQ(p[2], 2);
  const auto& d43 = get(Kind::D43, 2).pi;
  EXPECT_EQ(d43[0], 0);
  EXPECT_EQ(d43[1], Rational(1, 2));
}

TEST(AffineData, MstarMembership) {
  const AffineType b3 = make_type(Kind::B1, 3);
  EXPECT_TRUE(mstar_contains(b3, {1, 1, 2}));
  EXPECT_FALSE(mstar_contains(b3, {1, 1, 1}));
  for (Kind k : all_kinds()) {
    const AffineType t = make_type(k, fixed_rank(k) ? 2 : min_rank(k));
    for (const auto& row : registry(t).mstar_basis) EXPECT_TRUE(mstar_contains(t, row)) << kind_flag(k);
  }
}

TEST(AffineData, FlagsAndBounds) {
  for (Kind k : all_kinds()) EXPECT_EQ(parse_kind(kind_flag(k)), k);
  EXPECT_THROW(parse_kind("E8"), std::invalid_argument);
  EXPECT_THROW(make_type(Kind::D1, 3), std::invalid_argument);
  EXPECT_THROW(make_type(Kind::G21, 3), std::invalid_argument);
  EXPECT_THROW(make_type(Kind::A1, 1), std::invalid_argument);
  EXPECT_EQ(display_name(make_type(Kind::A2p, 2)), "A'_4^(2)");
  EXPECT_EQ(display_name(make_type(Kind::D2, 2)), "D_3^(2)");
}
