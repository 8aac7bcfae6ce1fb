#pragma once

#include <optional>
#include <vector>

#include "affgrass/exact.hpp"
#include "affgrass/partitions.hpp"

namespace affgrass {

// (m_0, ..., m_{n-1}) with zero sum
using Charge = std::vector<long>;

// throws std::invalid_argument if core is not an n-core
Charge phi(const Partition& core, int n);
// throws std::invalid_argument on a nonzero sum
Partition phi_inv(const Charge& m);

// (n/2) sum m_i^2 + sum i m_i, evaluated exactly and asserted integral
Int weight_from_charge(const Charge& m);

// beta_i = a_{(i-1) mod n} - a_{i mod n}, i = 1..n (stored 0-based)
std::vector<long> beta_from_residues(const Partition& core, int n);
// a_0 = |beta|^2 / 2, a_i = a_{i-1} - beta_i
std::vector<long> a_from_beta(const std::vector<long>& beta);
// m_i = beta_{i+1}: the two vectors coincide entrywise
Charge charge_from_beta(const std::vector<long>& beta);

struct SymmetryCheck {
  bool in_family = false;     // diagram-wise: self-conjugate / doubled distinct
  bool charge_pattern = false;
  Int weight_formula = 0;     // specialised formula, valid when charge_pattern holds
  int weight = 0;
};
// self-conjugate n-cores: m_{n-1-i} = -m_i
SymmetryCheck sc_charge_check(const Partition& core, int n);
// doubled distinct n-cores: m_0 = 0 and m_{n-i} = -m_i
SymmetryCheck dd_charge_check(const Partition& core, int n);

// Parts of lb recovered from the charge of its doubled form; needs lb in the
// d,r family for modulus g.
Partition ddbeta_parts(const Partition& lb, int g);

// Quotient shape of the conjugate doubled form of lb modulo N.
struct DdprimeShape {
  bool member = false;  // quotient pattern holds
  Partition core;
  Charge charge;        // charge of the core
  long m = 1;           // rectangle (m-1)^m in the last runner
  long m_square = 0;    // square side in runner N/2-1 (allowed only with squares)
  Rational weight_formula = 0;
  int weight = 0;
};
// with_square = false: the d,tr,r family; true: the d,tr family (N even)
DdprimeShape ddprime_quotient_shape(const Partition& lb, int N, bool with_square);

}  // namespace affgrass
