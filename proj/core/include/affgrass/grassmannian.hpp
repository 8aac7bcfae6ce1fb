#pragma once

#include <vector>

#include "affgrass/affine_data.hpp"
#include "affgrass/partitions.hpp"

namespace affgrass {

// s_j of affine A_{N-1}: add every addable j-node, or remove every removable one
Partition reflect_ambient(const Partition& core, int j, int N);
// node i of the type, through its word of ambient reflections
Partition reflect(const AffineType& t, int i, const Partition& core);

bool in_core_model(const AffineType& t, const Partition& core);

// a^X_i: coefficients of Lambda_0 - c(Lambda_0) on the type's simple roots.
// Throws std::invalid_argument outside the core model.
QVec typed_coefficients(const AffineType& t, const Partition& core);

// Three routes to the atomic length; they must agree.
Rational atomic_length_closed(const AffineType& t, const Partition& core);
Rational atomic_length_pi(const AffineType& t, const Partition& core);
Rational atomic_length_roots(const AffineType& t, const Partition& core);
// (Lambda_0 - c(Lambda_0), rho), from the root coefficients and root norms
Rational dual_atomic_length(const AffineType& t, const Partition& core);

enum class Grading { Length, DualLength };

struct OrbitEntry {
  Partition core;
  Rational length;       // atomic length
  Rational dual_length;
  int depth = 0;         // BFS distance from the empty core = Coxeter length
};

// Every model element with grading <= bound, sorted by (grading, core).
std::vector<OrbitEntry> orbit(const AffineType& t, const Rational& bound, Grading grading = Grading::Length);

// c = u t_nu with nu antidominant and beta = u(nu).
struct GrassmannianElement {
  AffineType type;
  QVec beta;              // epsilon coordinates
  QVec nu;
  std::vector<int> u;     // finite simple reflections (0-based), reduced
  int length = 0;
  int signature = 1;
};

// translation part read off the root coefficients of a core
QVec beta_of_core(const AffineType& t, const Partition& core);
GrassmannianElement decompose(const AffineType& t, const QVec& beta);
GrassmannianElement lattice_element(const AffineType& t, const Partition& core);

// word applied left to right: s_{w_k} ... s_{w_1} v
QVec apply_word(const CartanData& d, const std::vector<int>& word, const QVec& v);
// word read as the product s_{w_1} ... s_{w_k}
QVec apply_element(const CartanData& d, const std::vector<int>& word, const QVec& v);

// length of u t_gamma
long translation_length(const AffineType& t, const std::vector<int>& u, const QVec& gamma);

// -eta_dual nu + u^{-1} rho - rho, dominant
QVec dominant_weight(const GrassmannianElement& g);
// the weight matched against the V-coding; differs from dominant_weight by the
// scale on nu for C1 and A2p
QVec correspondence_lattice(const GrassmannianElement& g);

// eta_dual/2 |beta|^2 - (beta, rho) in the invariant form
Rational dual_length_closed(const AffineType& t, const QVec& beta);

}  // namespace affgrass
