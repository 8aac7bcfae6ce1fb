#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affgrass/affine_data.hpp"
#include "affgrass/partitions.hpp"
#include "affgrass/series.hpp"

namespace affgrass {

// ---- finite Weyl group and characters

struct WeylElement {
  std::vector<int> word;  // reduced, read as a product s_{w_1} ... s_{w_k}
  int sign = 1;
};
std::vector<WeylElement> weyl_group(const CartanData& d);

struct Straightened {
  int sign = 1;
  QVec weight;  // dominant
};
// nullopt when gamma + rho lies on a wall
std::optional<Straightened> straighten(const CartanData& d, const QVec& gamma);

// Laurent polynomials in x_i = e^{eps_i}. Exponents are doubled so that
// half-integral weights stay integral: x^v is stored under 2v.
LaurentPoly alternant(const CartanData& d, const QVec& gamma);
// a_{lambda+rho} x^{-rho} / prod_{alpha>0} (1 - x^{-alpha}), by exact division
LaurentPoly character(const CartanData& d, const QVec& lambda);
Rational weyl_dimension(const CartanData& d, const QVec& lambda);

// ---- denominator expansions

// (q exponent, dominant weight) -> coefficient of the character
using CharacterSum = std::map<std::pair<Rational, QVec>, Int>;
// sum over Grassmannian elements with dual atomic length <= order
CharacterSum delta_grassmannian(const AffineType& t, int order);
// sum over the translation lattice, characters straightened
CharacterSum delta_translation(const AffineType& t, int order);
// Graded by half steps: entry k is the coefficient of q^{k/2}, up to q^order.
// A_{2n}^(2) has (alpha_0, alpha_0) = 1, so half-integral exponents occur.
TruncatedSeries<LaurentPoly> expand_characters(const AffineType& t, const CharacterSum& sum, int order);

struct DeltaReport {
  bool characters_equal = false;
  bool laurent_equal = false;
  std::size_t grassmannian_terms = 0, translation_terms = 0;
  std::string first_mismatch;
  bool ok() const { return characters_equal && laurent_equal; }
};
DeltaReport delta_check(const AffineType& t, int order);

// ---- hook-length series

struct NoReport {
  int order = 0;
  std::vector<Polynomial> lhs, rhs;  // coefficient of q^m as a polynomial in z
  int first_mismatch = -1;
  bool ok() const { return first_mismatch < 0; }
};
NoReport nekrasov_okounkov_check(int order);
// at z = n^2 every partition of size <= order that is not an n-core has a zero product
bool no_core_vanishing(int n, int order);

struct HandeReport {
  int q_order = 0, u_order = 0;
  std::size_t lhs_terms = 0, rhs_terms = 0;
  std::string first_mismatch;
  bool ok() const { return first_mismatch.empty(); }
};
// equality modulo q^{q_order+1} and u^{u_order}
HandeReport hande_check(int q_order, int u_order);

struct MacdonaldReport {
  int order = 0;
  int dimension = 0;  // dim of the finite Lie algebra
  std::vector<Int> lhs, rhs;
  int first_mismatch = -1;
  bool ok() const { return first_mismatch < 0; }
};
// type A only: characters specialised at x = 1 become Weyl dimensions
MacdonaldReport macdonald_check(const AffineType& t, int order);

// ---- formal hook products

// Formal product of symbols X_k with integer exponents, kept reduced.
class XMultiset {
 public:
  XMultiset& mul(long k, long times = 1);
  XMultiset& div(long k, long times = 1) { return mul(k, -times); }
  XMultiset& times(const XMultiset& o, long power = 1);
  const std::map<long, long>& exponents() const { return exps_; }
  bool empty() const { return exps_.empty(); }
  bool operator==(const XMultiset& o) const { return exps_ == o.exps_; }
  std::string to_string() const;

 private:
  std::map<long, long> exps_;
};

enum class AlphaRule { AsPrinted, WithoutPartTerm };

struct EnumhookResult {
  bool applicable = false;  // the type has a row in the hook-product table
  bool holds = false;
  XMultiset lhs, rhs, residue;  // residue = lhs / rhs
};
EnumhookResult enumhook_identity(const AffineType& t, const Partition& core, AlphaRule rule = AlphaRule::AsPrinted);

// Type A row of the specialised table, cross-multiplied as Laurent polynomials
// in u: the hook product against the principal specialisation of s_r.
bool u_specialized_character(const AffineType& t, const Partition& core);

}  // namespace affgrass
