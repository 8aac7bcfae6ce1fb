#include "affgrass/linalg.hpp"

#include <stdexcept>

namespace affgrass::linalg {

namespace {

// row echelon form in place; returns pivot columns
std::vector<std::size_t> eliminate(QMat& M, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < M.size(); ++col) {
    std::size_t p = row;
    while (p < M.size() && M[p][col] == 0) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[row]);
    const Rational inv = 1 / M[row][col];
    for (auto& x : M[row]) x *= inv;
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (r == row || M[r][col] == 0) continue;
      const Rational k = M[r][col];
      for (std::size_t c = 0; c < M[r].size(); ++c) M[r][c] -= k * M[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QMat transpose(const QMat& A) {
  if (A.empty()) return {};
  QMat T(A[0].size(), QVec(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
  return T;
}

QVec solve(const QMat& A, const QVec& b) {
  if (A.size() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = A.empty() ? 0 : A[0].size();
  QMat M = A;
  for (std::size_t i = 0; i < M.size(); ++i) M[i].push_back(b[i]);
  const auto pivots = eliminate(M, n);
  if (pivots.size() != n) throw std::runtime_error("solve: system is underdetermined");
  for (std::size_t r = n; r < M.size(); ++r)
    if (M[r][n] != 0) throw std::runtime_error("solve: inconsistent system");
  QVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = M[i][n];
  return x;
}

QVec null_vector(const QMat& A) {
  const std::size_t n = A.empty() ? 0 : A[0].size();
  QMat M = A;
  const auto pivots = eliminate(M, n);
  if (pivots.size() + 1 != n) throw std::runtime_error("null_vector: corank is not 1");
  std::size_t free_col = 0;
  for (std::size_t c = 0, k = 0; c < n; ++c) {
    if (k < pivots.size() && pivots[k] == c) {
      ++k;
      continue;
    }
    free_col = c;
  }
  QVec v(n, Rational(0));
  v[free_col] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -M[i][free_col];
  return v;
}

QMat lattice_basis(const QMat& generators) {
  if (generators.empty()) return {};
  const std::size_t dim = generators[0].size();
  Int den = 1;
  for (const auto& g : generators)
    for (const auto& x : g) den = boost::multiprecision::lcm(den, Int(boost::multiprecision::denominator(x)));
  std::vector<std::vector<Int>> rows;
  for (const auto& g : generators) {
    std::vector<Int> r(dim);
    for (std::size_t j = 0; j < dim; ++j) r[j] = to_integer(g[j] * den);
    rows.push_back(std::move(r));
  }
  // integer row reduction (Euclid on each column)
  std::size_t top = 0;
  for (std::size_t col = 0; col < dim && top < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        const Int q = rows[r][col] / rows[top][col];
        for (std::size_t c = 0; c < dim; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) {
      Int q = rows[r][col] / rows[top][col];
      if (rows[r][col] - q * rows[top][col] < 0) q -= 1;
      for (std::size_t c = 0; c < dim; ++c) rows[r][c] -= q * rows[top][c];
    }
    ++top;
  }
  QMat basis;
  for (std::size_t r = 0; r < top; ++r) {
    QVec v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = Rational(rows[r][c]) / Rational(den);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_lattice(const QMat& basis, const QVec& v) {
  if (is_zero(v)) return true;
  QVec x;
  try {
    x = solve(transpose(basis), v);
  } catch (const std::runtime_error&) {
    return false;
  }
  for (const auto& c : x)
    if (!is_integral(c)) return false;
  return true;
}

}  // namespace affgrass::linalg
