#pragma once

#include <string>
#include <vector>

#include "affgrass/exact.hpp"

namespace affgrass {

// Compact flags: A1 = A_{n-1}^(1) with n the modulus, B1, C1, D1 untwisted,
// A2odd = A_{2n-1}^(2), A2 = A_{2n}^(2), A2p = A'_{2n}^(2), D2 = D_{n+1}^(2),
// G21 = G_2^(1), D43 = D_4^(3).
enum class Kind { A1, B1, C1, D1, A2odd, A2, A2p, D2, G21, D43 };

struct AffineType {
  Kind kind = Kind::A1;
  int rank = 2;  // for A1 this is the modulus n
  bool operator==(const AffineType& o) const { return kind == o.kind && rank == o.rank; }
  bool operator<(const AffineType& o) const { return kind != o.kind ? kind < o.kind : rank < o.rank; }
};

const std::vector<Kind>& all_kinds();
std::string kind_flag(Kind k);
Kind parse_kind(const std::string& flag);  // throws std::invalid_argument
int min_rank(Kind k);
bool fixed_rank(Kind k);                   // G21, D43
// throws std::invalid_argument when the rank is out of bounds
AffineType make_type(Kind k, int rank);
std::string display_name(const AffineType& t);
// the type whose Cartan matrix is the transpose
Kind dual_kind(Kind k);

enum class CoreModel { Cores, SelfConjugate, SelfConjugateEvenDiagonal, G2Pattern };
std::string core_model_name(CoreModel m);

struct CartanData {
  AffineType type;
  int modulus = 0;         // N: everything folds into affine A_{N-1}^(1)
  int finite_rank = 0;     // simple roots 1..finite_rank; node 0 is affine
  char finite_kind = 'A';  // 'A', 'B', 'C', 'D', 'G'
  QMat cartan;             // A_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)
  std::vector<int> marks, comarks;
  Rational eta, eta_dual, eta_tilde;
  Rational norm_factor;    // invariant form = norm_factor * Euclidean form on the finite part
  Rational lambda0_scale;  // coefficient of ambient Lambda_0 in the folded Lambda_0
  QMat fold_roots;         // ambient alpha-coordinates, one row per node
  QMat fold_weights;       // ambient Lambda-coordinates, one row per node
  std::vector<std::vector<int>> generator_words;  // ambient reflections per node
  QVec pi;                 // box weight by residue mod N
  CoreModel core_model = CoreModel::Cores;
  QMat simple_roots;       // epsilon coordinates
  QMat positive_roots;
  QVec rho;                // half sum of positive roots
  QVec theta;              // sum_{i>=1} a_i alpha_i
  QVec root_norms;         // (alpha_i, alpha_i) in the invariant form, i = 0..finite_rank
  QMat mstar_basis;        // simple-root coordinates, Hermite basis
  std::string mstar_description;

  int nodes() const { return finite_rank + 1; }
  int epsilon_dim() const { return simple_roots.empty() ? 0 : static_cast<int>(simple_roots[0].size()); }
  // delta-step multiplier for a positive root of the given Euclidean norm
  Rational kappa(const Rational& norm2) const;
};

// Built once per type and cached; runs the internal consistency checks.
const CartanData& registry(const AffineType& t);

// invariant form of affine A_{N-1}^(1) on ambient root coordinates
Rational ambient_form(int N, const QVec& u, const QVec& v);
QVec reflect(const QVec& v, const QVec& root);

// Membership in M* as listed in the lattice table (simple-root coordinates).
// A2p has no row there and falls back to the computed lattice.
bool mstar_contains(const AffineType& t, const QVec& coords);
bool mstar_contains_computed(const AffineType& t, const QVec& coords);

QVec fold_root(const AffineType& t, int i);
QVec fold_weight(const AffineType& t, int i);

// coordinates of an epsilon-vector in the simple roots
QVec simple_root_coords(const CartanData& d, const QVec& v);
bool is_positive_root(const CartanData& d, const QVec& v);

std::string format_marks(const std::vector<int>& v);

}  // namespace affgrass
