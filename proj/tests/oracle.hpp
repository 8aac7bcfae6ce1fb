#pragma once

// Test-side reference implementations. Deliberately naive and written without
// the library's boundary-word machinery, so agreement means something.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Part = std::vector<int>;

inline void gen(int left, int maxpart, Part& cur, std::vector<Part>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(left, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen(left - k, k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Part> partitions(int m) {
  std::vector<Part> out;
  Part cur;
  gen(m, m, cur, out);
  return out;
}

inline Part conj(const Part& p) {
  Part c(p.empty() ? 0 : p[0], 0);
  for (int r : p)
    for (int j = 0; j < r; ++j) ++c[j];
  return c;
}

// arm + leg + 1 box by box
inline std::vector<int> hooks(const Part& p) {
  const Part c = conj(p);
  std::vector<int> h;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) h.push_back(p[i] - j + c[j] - static_cast<int>(i) - 1);
  std::sort(h.begin(), h.end());
  return h;
}

inline bool is_core(const Part& p, int n) {
  for (int h : hooks(p))
    if (h % n == 0) return false;
  return true;
}

inline int size(const Part& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

// James abacus with a multiple of n beads. Runner r holds beta numbers = r mod n.
struct Abacus {
  Part core;
  std::vector<Part> quotient;
};

inline Part from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int k = static_cast<int>(beta.size());
  Part p;
  for (int i = 0; i < k; ++i)
    if (beta[i] - (k - 1 - i) > 0) p.push_back(beta[i] - (k - 1 - i));
  return p;
}

inline Abacus abacus(const Part& p, int n) {
  int k = static_cast<int>(p.size());
  k = ((k + n - 1) / n) * n;
  if (k == 0) k = n;
  std::vector<std::vector<int>> levels(n);
  for (int i = 0; i < k; ++i) {
    const int part = i < static_cast<int>(p.size()) ? p[i] : 0;
    const int b = part + k - 1 - i;
    levels[b % n].push_back(b / n);
  }
  Abacus a;
  std::vector<int> slid;
  for (int r = 0; r < n; ++r) {
    auto& lv = levels[r];
    std::sort(lv.rbegin(), lv.rend());
    const int c = static_cast<int>(lv.size());
    Part q;
    for (int j = 0; j < c; ++j)
      if (lv[j] - (c - 1 - j) > 0) q.push_back(lv[j] - (c - 1 - j));
    a.quotient.push_back(q);
    for (int j = 0; j < c; ++j) slid.push_back(r + n * j);
  }
  a.core = from_beta(slid);
  return a;
}

// coefficients of prod_{k>=1} (1 - q^k) up to q^order, by pentagonal numbers
inline std::vector<long long> euler(int order) {
  std::vector<long long> e(order + 1, 0);
  for (long long j = -order; j <= order; ++j) {
    const long long k = j * (3 * j - 1) / 2;
    if (k >= 0 && k <= order) e[k] += (j % 2 == 0) ? 1 : -1;
  }
  return e;
}

inline std::vector<long long> mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Schur polynomial of gl_n by semistandard tableaux: exponent vector -> count
inline void fill(const Part& lam, int n, std::size_t box, std::vector<std::vector<int>>& t,
                 std::map<std::vector<int>, long>& out) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j, ++idx) {
      if (idx != box) continue;
      int lo = 1;
      if (j > 0) lo = std::max(lo, t[i][j - 1]);
      if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
      for (int v = lo; v <= n; ++v) {
        t[i][j] = v;
        fill(lam, n, box + 1, t, out);
      }
      return;
    }
  std::vector<int> e(n, 0);
  for (const auto& row : t)
    for (int v : row) ++e[v - 1];
  ++out[e];
}

inline std::map<std::vector<int>, long> schur(const Part& lam, int n) {
  std::vector<std::vector<int>> t;
  for (int r : lam) t.emplace_back(r, 0);
  std::map<std::vector<int>, long> out;
  fill(lam, n, 0, t, out);
  return out;
}

}  // namespace oracle
