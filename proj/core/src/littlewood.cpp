#include "affgrass/littlewood.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace affgrass {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

namespace {

using Letter = std::function<int(long)>;

long charge(const Letter& c, long lo, long hi) {
  long ones = 0, zeros = 0;
  for (long k = lo; k < 0; ++k) ones += c(k);
  for (long k = 0; k < hi; ++k) zeros += 1 - c(k);
  return ones - zeros;
}

Partition read_partition(const Letter& c, long lo, long hi) {
  Partition res;
  int i = 1;
  for (long z = hi - 1; z >= lo; --z) {
    if (c(z) != 0) continue;
    const long part = z + i;
    if (part <= 0) break;
    res.push_back(static_cast<int>(part));
    ++i;
  }
  return res;
}

}  // namespace

Partition core_from_shifts(const std::vector<long>& shifts) {
  const long n = static_cast<long>(shifts.size());
  if (n < 1) throw std::invalid_argument("empty shift vector");
  if (std::accumulate(shifts.begin(), shifts.end(), 0L) != 0) throw std::invalid_argument("shifts must sum to zero");
  const long lo = n * (*std::min_element(shifts.begin(), shifts.end())) - n;
  const long hi = n * (*std::max_element(shifts.begin(), shifts.end())) + n;
  auto c = [&](long k) { return floor_div(k, n) >= shifts[floor_mod(k, n)] ? 1 : 0; };
  return read_partition(c, lo, hi);
}

LittlewoodData decompose(const Partition& p, int n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  const BoundaryWord w = psi(p);
  const long lo = w.lo - n, hi = w.hi() + n;
  LittlewoodData d;
  d.n = n;
  for (long k = 0; k < n; ++k) {
    const long ilo = floor_div(lo - k, n) - 1, ihi = floor_div(hi - k, n) + 2;
    auto runner = [&](long i) { return w.letter(n * i + k); };
    const long m = -charge(runner, ilo, ihi);
    d.shifts.push_back(m);
    auto moved = [&](long i) { return w.letter(n * (i + m) + k); };
    const long pad = std::labs(m) + 1;
    d.quotient.push_back(read_partition(moved, ilo - pad, ihi + pad));
  }
  d.core = core_from_shifts(d.shifts);
  return d;
}

Partition compose_from_shifts(const std::vector<long>& shifts, const std::vector<Partition>& quotient) {
  const long n = static_cast<long>(shifts.size());
  if (static_cast<long>(quotient.size()) != n) throw std::invalid_argument("quotient size must match modulus");
  if (std::accumulate(shifts.begin(), shifts.end(), 0L) != 0) throw std::invalid_argument("shifts must sum to zero");
  std::vector<BoundaryWord> words;
  long longest = 0, widest = 0;
  for (const auto& q : quotient) {
    words.push_back(psi(q));
    longest = std::max(longest, static_cast<long>(q.size()));
    widest = std::max(widest, q.empty() ? 0L : static_cast<long>(q[0]));
  }
  const long mn = *std::min_element(shifts.begin(), shifts.end());
  const long mx = *std::max_element(shifts.begin(), shifts.end());
  const long lo = n * (mn - longest - 3) - n;
  const long hi = n * (mx + widest + 3) + n;
  auto c = [&](long k) {
    const long i = floor_mod(k, n);
    return words[i].letter(floor_div(k, n) - shifts[i]);
  };
  return read_partition(c, lo, hi);
}

Partition compose(const Partition& core, const std::vector<Partition>& quotient) {
  const int n = static_cast<int>(quotient.size());
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  if (!is_core(core, n)) throw std::invalid_argument("first component is not an n-core");
  return compose_from_shifts(decompose(core, n).shifts, quotient);
}

Multiset divisible_hooks(const Partition& p, int n) {
  Multiset out;
  for (int h : hooks(p))
    if (h % n == 0) out.push_back(h);
  return out;
}

Multiset scaled_quotient_hooks(const Partition& p, int n) {
  Multiset out;
  for (const auto& q : decompose(p, n).quotient)
    for (int h : hooks(q)) out.push_back(n * h);
  std::sort(out.begin(), out.end());
  return out;
}

DdtrReport ddtr_decompose_check(const Partition& p, int n) {
  if (!is_ddtr(p)) throw std::invalid_argument("partition is not a conjugate doubled distinct partition");
  const LittlewoodData d = decompose(p, n);
  DdtrReport r;
  r.core_is_ddtr = is_ddtr(d.core) && is_core(d.core, n);
  r.quotient_mirror = true;
  for (int j = 0; j <= n - 2; ++j)
    if (d.quotient[j] != conjugate(d.quotient[n - 2 - j])) r.quotient_mirror = false;
  r.last_is_ddtr = is_ddtr(d.quotient[n - 1]);
  long total = weight(d.core) + static_cast<long>(n) * weight(d.quotient[n - 1]);
  if (n % 2 == 0) {
    r.middle_is_sc = is_sc(d.quotient[n / 2 - 1]);
    for (int i = 0; i <= n / 2 - 2; ++i) total += 2L * n * weight(d.quotient[i]);
    total += static_cast<long>(n) * weight(d.quotient[n / 2 - 1]);
  } else {
    for (int i = 0; i <= (n - 3) / 2; ++i) total += 2L * n * weight(d.quotient[i]);
  }
  r.weight_identity = total == weight(p);
  r.hook_identity = divisible_hooks(p, n) == scaled_quotient_hooks(p, n);
  return r;
}

}  // namespace affgrass
