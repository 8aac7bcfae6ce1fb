#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affgrass/affine_data.hpp"
#include "affgrass/charges.hpp"
#include "affgrass/grassmannian.hpp"
#include "affgrass/partitions.hpp"

namespace affgrass {

struct FamilySpec {
  Family family = Family::D;
  int modulus = 0;
};

// family the construction below lands in; nullopt for A1 (plain cores)
std::optional<FamilySpec> constructed_family(const AffineType& t);
// family listed for the type in the partition-family table; nullopt when the
// table has no row (A1 lists cores, G21 and D43 are absent)
std::optional<FamilySpec> table_family(const AffineType& t);

struct TypedDistinct {
  AffineType type;
  Partition lambda_bar;
  std::optional<Partition> c_prime;  // intermediate core for D2, A2 (doubled) and A2p (self-conjugate)
  Rational weight;                   // the quantity equal to the atomic length
};

// Throws std::invalid_argument outside the core model. A1 is not covered.
TypedDistinct core_to_distinct(const AffineType& t, const Partition& core);
// Throws std::invalid_argument when lambda_bar is outside the image.
Partition distinct_to_core(const AffineType& t, const Partition& lambda_bar);

// (m, ms) -> antisymmetric charge of length 2n, n - 1 = ms.size()
Charge g_map(long m, const std::vector<long>& ms);

// the partition a distinct partition stands for in the type: sc, dd or ddtr
Partition doubled_form(const AffineType& t, const Partition& lambda_bar);

// Exponent of -1 in the signature, from hook counts.
// literal: the formula of the table row; nullopt when the type has no row.
// corrected: the variant found to match the Coxeter length; nullopt if unknown.
std::optional<long> signature_exponent_table(const AffineType& t, const Partition& core);
std::optional<long> signature_exponent_corrected(const AffineType& t, const Partition& core);
std::string signature_formula_table(const AffineType& t);
std::string signature_formula_corrected(const AffineType& t);

// top n of m_i = max{(k+1)g + i : c_{kg+i} = 0}, decreasing. Throws if n > g.
std::vector<long> v_coding(const Partition& p, int g, int n);

// V-coding (g = eta_tilde) of the partition attached to the core by the dual
// type's bijection; for A1 the core itself
std::vector<long> correspondence_coding(const AffineType& t, const Partition& core);

// weight (v_i + i - g) predicted from the V-coding of the partition attached
// to the core by the dual type's bijection, in the epsilon coordinates of t
QVec correspondence_weight(const AffineType& t, const Partition& core);

}  // namespace affgrass
