#pragma once

#include "affgrass/exact.hpp"

// Small exact linear algebra over Q, sized for Cartan data (dimension < 10).
namespace affgrass::linalg {

// Solves A x = b for a consistent system with full column rank.
// A is given row-major (rows = equations). Throws std::runtime_error otherwise.
QVec solve(const QMat& A, const QVec& b);

// A nonzero vector spanning the right null space of A; requires corank 1.
QVec null_vector(const QMat& A);

QMat transpose(const QMat& A);

// Hermite basis (rows) of the Z-lattice spanned by rational generators.
// Output is upper triangular with positive pivots, one row per rank.
QMat lattice_basis(const QMat& generators);

// Coordinates of v in the given row basis when they exist and are integers.
bool in_lattice(const QMat& basis, const QVec& v);

}  // namespace affgrass::linalg
