#include <gtest/gtest.h>

#include <set>

#include "affgrass/grassmannian.hpp"
#include "oracle.hpp"

using namespace affgrass;

namespace {

std::vector<AffineType> small_types() {
  std::vector<AffineType> out;
  for (Kind k : all_kinds()) {
    const int lo = fixed_rank(k) ? 2 : min_rank(k);
    const int hi = fixed_rank(k) ? 2 : std::max(lo, 3);
    for (int r = lo; r <= hi; ++r) out.push_back(make_type(k, r));
  }
  return out;
}

}  // namespace

TEST(Grassmannian, StaircaseTwoCores) {
  auto orb = orbit(make_type(Kind::A1, 2), 10);
  std::vector<Partition> cores;
  for (const auto& e : orb) cores.push_back(e.core);
  EXPECT_EQ(cores, (std::vector<Partition>{{}, {1}, {2, 1}, {3, 2, 1}, {4, 3, 2, 1}}));
}

// A_{n-1}^(1): the orbit is every n-core, L = |c|
TEST(Grassmannian, TypeAOrbitIsAllCores) {
  for (int n = 2; n <= 5; ++n) {
    std::set<Partition> want;
    for (int m = 0; m <= 14; ++m)
      for (const auto& p : oracle::partitions(m))
        if (oracle::is_core(p, n)) want.insert(p);
    std::set<Partition> got;
    for (const auto& e : orbit(make_type(Kind::A1, n), 14)) {
      got.insert(e.core);
      EXPECT_EQ(e.length, Rational(weight(e.core)));
    }
    EXPECT_EQ(got, want) << n;
  }
}

// C_n^(1): self-conjugate 2n-cores, L = |c|
TEST(Grassmannian, TypeCOrbitIsSelfConjugateCores) {
  for (int n = 2; n <= 3; ++n) {
    std::set<Partition> want;
    for (int m = 0; m <= 16; ++m)
      for (const auto& p : oracle::partitions(m))
        if (oracle::is_core(p, 2 * n) && oracle::conj(p) == p) want.insert(p);
    std::set<Partition> got;
    for (const auto& e : orbit(make_type(Kind::C1, n), 16)) {
      got.insert(e.core);
      EXPECT_EQ(e.length, Rational(weight(e.core)));
    }
    EXPECT_EQ(got, want) << n;
  }
}

TEST(Grassmannian, ThreeLengthsAgree) {
  for (const auto& t : small_types())
    for (const auto& e : orbit(t, 12)) {
      EXPECT_EQ(atomic_length_closed(t, e.core), e.length) << display_name(t);
      EXPECT_EQ(atomic_length_pi(t, e.core), e.length) << display_name(t);
      EXPECT_EQ(atomic_length_roots(t, e.core), e.length) << display_name(t);
    }
}

TEST(Grassmannian, LatticeLengthIsBfsDepth) {
  for (const auto& t : small_types())
    for (const auto& e : orbit(t, 12)) {
      auto g = lattice_element(t, e.core);
      EXPECT_EQ(g.length, e.depth) << display_name(t) << " " << format_partition(e.core);
      EXPECT_EQ(g.signature, e.depth % 2 ? -1 : 1);
      EXPECT_EQ(g.length, translation_length(t, g.u, g.nu));
    }
}

TEST(Grassmannian, DominantWeights) {
  for (const auto& t : small_types()) {
    const auto& d = registry(t);
    for (const auto& e : orbit(t, 10)) {
      auto w = dominant_weight(lattice_element(t, e.core));
      for (const auto& a : d.simple_roots) EXPECT_GE(dot(w, a), 0) << display_name(t);
    }
  }
}

TEST(Grassmannian, DualLengthClosedForm) {
  for (const auto& t : small_types()) {
    if (t.kind == Kind::A2p) continue;  // a_0 dual is 2 there, the closed form does not apply
    for (const auto& e : orbit(t, 10))
      EXPECT_EQ(dual_length_closed(t, beta_of_core(t, e.core)), e.dual_length) << display_name(t);
  }
}

TEST(Grassmannian, ReflectionsAreInvolutions) {
  for (const auto& t : small_types())
    for (const auto& e : orbit(t, 8))
      for (int i = 0; i < registry(t).nodes(); ++i) EXPECT_EQ(reflect(t, i, reflect(t, i, e.core)), e.core);
}

TEST(Grassmannian, DualGradingOrbitSorted) {
  auto orb = orbit(make_type(Kind::C1, 2), 8, Grading::DualLength);
  for (std::size_t i = 1; i < orb.size(); ++i) EXPECT_LE(orb[i - 1].dual_length, orb[i].dual_length);
  for (const auto& e : orb) EXPECT_LE(e.dual_length, 8);
}

TEST(Grassmannian, OutsideModelRejected) {
  EXPECT_FALSE(in_core_model(make_type(Kind::C1, 2), {3, 3}));
  EXPECT_THROW(typed_coefficients(make_type(Kind::C1, 2), {3, 3}), std::invalid_argument);
}
