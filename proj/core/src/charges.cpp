#include "affgrass/charges.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "affgrass/littlewood.hpp"

namespace affgrass {

Charge phi(const Partition& core, int n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  if (!is_core(core, n)) throw std::invalid_argument(format_partition(core) + " is not an n-core");
  return decompose(core, n).shifts;
}

Partition phi_inv(const Charge& m) {
  if (std::accumulate(m.begin(), m.end(), 0L) != 0) throw std::invalid_argument("charge must sum to zero");
  return core_from_shifts(m);
}

Int weight_from_charge(const Charge& m) {
  const long n = static_cast<long>(m.size());
  Rational sq = 0, lin = 0;
  for (long i = 0; i < n; ++i) {
    sq += Rational(m[i]) * m[i];
    lin += Rational(i) * m[i];
  }
  return to_integer(Rational(n, 2) * sq + lin);
}

std::vector<long> beta_from_residues(const Partition& core, int n) {
  const std::vector<int> a = residue_counts(core, n);
  std::vector<long> beta(n);
  for (int i = 1; i <= n; ++i) beta[i - 1] = a[(i - 1) % n] - a[i % n];
  return beta;
}

std::vector<long> a_from_beta(const std::vector<long>& beta) {
  long sq = 0;
  for (long b : beta) sq += b * b;
  if (sq % 2 != 0) throw std::invalid_argument("beta has odd squared norm");
  std::vector<long> a(beta.size());
  if (a.empty()) return a;
  a[0] = sq / 2;
  for (std::size_t i = 1; i < a.size(); ++i) a[i] = a[i - 1] - beta[i - 1];
  return a;
}

Charge charge_from_beta(const std::vector<long>& beta) { return beta; }

SymmetryCheck sc_charge_check(const Partition& core, int n) {
  const Charge m = phi(core, n);
  SymmetryCheck r;
  r.in_family = is_sc(core);
  r.weight = weight(core);
  r.charge_pattern = true;
  for (int i = 0; i < n; ++i)
    if (m[n - 1 - i] != -m[i]) r.charge_pattern = false;
  for (int i = 0; i < n / 2; ++i) r.weight_formula += Int(n) * m[i] * m[i] + Int(2 * i - n + 1) * m[i];
  return r;
}

SymmetryCheck dd_charge_check(const Partition& core, int n) {
  const Charge m = phi(core, n);
  SymmetryCheck r;
  r.in_family = is_dd(core);
  r.weight = weight(core);
  r.charge_pattern = m[0] == 0;
  for (int i = 1; i < n; ++i)
    if (m[n - i] != -m[i]) r.charge_pattern = false;
  for (int i = 1; i <= (n - 1) / 2; ++i) r.weight_formula += Int(n) * m[i] * m[i] + Int(2 * i - n) * m[i];
  return r;
}

Partition ddbeta_parts(const Partition& lb, int g) {
  if (!in_family(lb, Family::DR, g)) throw std::invalid_argument("partition is not in the d,r family");
  const Charge m = phi(double_distinct(lb), g);
  Partition parts;
  for (int i = 1; i < g; ++i)
    for (long k = 0; k < m[i]; ++k) parts.push_back(static_cast<int>(g * k + i));
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

DdprimeShape ddprime_quotient_shape(const Partition& lb, int N, bool with_square) {
  if (!is_distinct(lb)) throw std::invalid_argument("partition is not distinct");
  if (with_square && N % 2 != 0) throw std::invalid_argument("square runner needs an even modulus");
  const LittlewoodData d = decompose(ddtr_from_distinct(lb), N);
  DdprimeShape s;
  s.core = d.core;
  s.charge = d.shifts;
  s.weight = weight(lb);
  for (int x : lb) {
    if (x % N == 0) s.m = std::max<long>(s.m, (N + x) / N);
    if (with_square && x % N == N / 2) s.m_square = std::max<long>(s.m_square, (x + N / 2) / N);
  }
  const Partition rect(static_cast<std::size_t>(s.m > 1 ? s.m : 0), static_cast<int>(s.m - 1));
  const Partition square(static_cast<std::size_t>(s.m_square), static_cast<int>(s.m_square));
  s.member = d.quotient[N - 1] == rect;
  for (int j = 0; j <= N - 2; ++j) {
    const bool middle = with_square && j == N / 2 - 1;
    if (middle ? d.quotient[j] != square : !d.quotient[j].empty()) s.member = false;
  }
  // one formula covers every modulus once the free charges are indexed from 0
  const Rational half(N, 2);
  const int free_count = (N - 1) / 2;
  Rational sq = Rational(s.m) * s.m + Rational(s.m_square) * s.m_square, lin = -half * s.m;
  for (int i = 0; i < free_count; ++i) {
    sq += Rational(s.charge[i]) * s.charge[i];
    lin += (Rational(i) - half + 1) * s.charge[i];
  }
  s.weight_formula = half * sq + lin;
  return s;
}

}  // namespace affgrass
