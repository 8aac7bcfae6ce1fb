#include "affgrass/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace affgrass {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

bool is_distinct(const Partition& p) {
  if (!is_partition(p)) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] == p[i + 1]) return false;
  return true;
}

Partition make_partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!is_partition(parts)) throw std::invalid_argument("not a partition: " + format_partition(parts));
  return parts;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  if (text.empty() || text == "-" || text == "[]") return parts;
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == ' ' || ch == '[' || ch == ']' || ch == '(' || ch == ')'; }),
          s.end());
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty part in '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad part '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad part '" + tok + "'");
    parts.push_back(v);
  }
  return make_partition(parts);
}

std::string format_partition(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

int weight(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

int durfee_size(const Partition& p) {
  int d = 0;
  while (d < static_cast<int>(p.size()) && p[d] > d) ++d;
  return d;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  Partition t(p[0], 0);
  for (int row : p)
    for (int j = 0; j < row; ++j) ++t[j];
  return t;
}

std::vector<std::vector<int>> hook_grid(const Partition& p) {
  const Partition t = conjugate(p);
  std::vector<std::vector<int>> g(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    g[i].resize(p[i]);
    for (int j = 0; j < p[i]; ++j) g[i][j] = (p[i] - j - 1) + (t[j] - static_cast<int>(i) - 1) + 1;
  }
  return g;
}

Multiset hooks(const Partition& p) {
  Multiset h;
  for (const auto& row : hook_grid(p)) h.insert(h.end(), row.begin(), row.end());
  std::sort(h.begin(), h.end());
  return h;
}

int count_below(const Multiset& hs, int n) {
  return static_cast<int>(std::count_if(hs.begin(), hs.end(), [n](int h) { return h < n; }));
}

bool is_core(const Partition& p, int n) {
  const Multiset h = hooks(p);
  return std::find(h.begin(), h.end(), n) == h.end();
}

std::vector<int> residue_counts(const Partition& p, int n) {
  std::vector<int> a(n, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int r = (j - static_cast<int>(i)) % n;
      if (r < 0) r += n;
      ++a[r];
    }
  return a;
}

// ---- boundary words

int BoundaryWord::letter(long k) const {
  if (k < lo) return 0;
  if (k >= hi()) return 1;
  return window[k - lo] == '1' ? 1 : 0;
}

BoundaryWord canonical(BoundaryWord w) {
  const auto first = w.window.find('1');
  const auto last = w.window.rfind('0');
  if (first == std::string::npos || last == std::string::npos || last < first) return {0, ""};
  w.lo += static_cast<long>(first);
  w.window = w.window.substr(first, last - first + 1);
  return w;
}

BoundaryWord psi(const Partition& p) {
  if (p.empty()) return {0, ""};
  const long ell = static_cast<long>(p.size());
  BoundaryWord w;
  w.lo = -ell;
  const long top = p[0] - 1;
  w.window.assign(static_cast<std::size_t>(top - w.lo + 1), '1');
  for (long i = 1; i <= ell; ++i) w.window[p[i - 1] - i - w.lo] = '0';
  return w;
}

long word_charge(const BoundaryWord& w) {
  long ones = 0, zeros = 0;
  for (long k = w.lo; k < w.hi(); ++k) {
    if (k < 0 && w.letter(k) == 1) ++ones;
    if (k >= 0 && w.letter(k) == 0) ++zeros;
  }
  return ones - zeros;
}

namespace {

// zeros read in descending order: part = z + i until it drops to 0
Partition from_letters(const std::function<int(long)>& letter, long lo, long hi) {
  Partition res;
  int i = 1;
  for (long z = hi - 1; z >= lo; --z) {
    if (letter(z) != 0) continue;
    const long part = z + i;
    if (part <= 0) break;
    res.push_back(static_cast<int>(part));
    ++i;
  }
  return res;
}

}  // namespace

Partition psi_inv(const BoundaryWord& w) {
  for (char ch : w.window)
    if (ch != '0' && ch != '1') throw std::invalid_argument("boundary word letters must be 0 or 1");
  if (word_charge(w) != 0) throw std::invalid_argument("boundary word is not balanced");
  return from_letters([&](long k) { return w.letter(k); }, w.lo, w.hi());
}

std::vector<HookPair> hook_index_pairs(const Partition& p) {
  const Partition t = conjugate(p);
  const BoundaryWord w = psi(p);
  std::vector<HookPair> out;
  for (std::size_t r = 0; r < p.size(); ++r)
    for (int col = 0; col < p[r]; ++col) {
      HookPair hp;
      hp.row = static_cast<int>(r);
      hp.col = col;
      hp.i = col - t[col];
      hp.j = p[r] - static_cast<long>(r) - 1;
      long ones = 0, zeros = 0;
      // endpoints included: c_i = 1 and c_j = 0 count themselves
      for (long k = hp.i; k < 0; ++k) ones += w.letter(k);
      for (long k = 0; k <= hp.j; ++k) zeros += 1 - w.letter(k);
      hp.above_word = ones < zeros;
      hp.above_diagram = col > static_cast<int>(r);
      out.push_back(hp);
    }
  return out;
}

// ---- enumeration

namespace {

void gen_parts(int m, int maxpart, bool distinct, Partition& cur, std::vector<Partition>& out) {
  if (m == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(m, maxpart); p >= 1; --p) {
    cur.push_back(p);
    gen_parts(m - p, distinct ? p - 1 : p, distinct, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  Partition cur;
  gen_parts(m, m, false, cur, out);
  return out;
}

std::vector<Partition> distinct_partitions_of(int m) {
  std::vector<Partition> out;
  Partition cur;
  gen_parts(m, m, true, cur, out);
  return out;
}

// ---- Frobenius coordinates and the three doublings

Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs) {
  const int d = static_cast<int>(arms.size());
  Partition rows;
  for (int i = 0; i < d; ++i) rows.push_back(arms[i] + i + 1);
  for (int r = d;; ++r) {
    int len = 0;
    for (int j = 0; j < d; ++j)
      if (legs[j] + j + 1 > r) ++len;
    if (len == 0) break;
    rows.push_back(len);
  }
  return rows;
}

void frobenius(const Partition& p, std::vector<int>& arms, std::vector<int>& legs) {
  const Partition t = conjugate(p);
  const int d = durfee_size(p);
  arms.clear();
  legs.clear();
  for (int i = 0; i < d; ++i) {
    arms.push_back(p[i] - i - 1);
    legs.push_back(t[i] - i - 1);
  }
}

namespace {

std::vector<int> shifted(const Partition& lb, int by) {
  std::vector<int> v;
  for (int x : lb) v.push_back(x + by);
  return v;
}

}  // namespace

Partition double_distinct(const Partition& lb) { return from_frobenius(shifted(lb, 0), shifted(lb, -1)); }
Partition sc_from_distinct(const Partition& lb) { return from_frobenius(shifted(lb, -1), shifted(lb, -1)); }
Partition ddtr_from_distinct(const Partition& lb) { return from_frobenius(shifted(lb, -1), shifted(lb, 0)); }

namespace {

std::optional<Partition> recover(const Partition& p, int arm_shift, Partition (*forward)(const Partition&)) {
  std::vector<int> arms, legs;
  frobenius(p, arms, legs);
  Partition lb = shifted(arms, arm_shift);
  if (!is_distinct(lb) || forward(lb) != p) return std::nullopt;
  return lb;
}

}  // namespace

std::optional<Partition> distinct_from_dd(const Partition& p) { return recover(p, 0, double_distinct); }
std::optional<Partition> distinct_from_sc(const Partition& p) { return recover(p, 1, sc_from_distinct); }
std::optional<Partition> distinct_from_ddtr(const Partition& p) { return recover(p, 1, ddtr_from_distinct); }

bool is_sc(const Partition& p) { return conjugate(p) == p; }

bool is_dd(const Partition& p) {
  const Partition t = conjugate(p);
  const int d = durfee_size(p);
  for (int i = 0; i < d; ++i)
    if (p[i] != t[i] + 1) return false;
  return true;
}

bool is_ddtr(const Partition& p) { return is_dd(conjugate(p)); }

namespace {

long word_span(const BoundaryWord& w) { return std::max(std::labs(w.lo), std::labs(w.hi())) + 3; }

}  // namespace

bool is_sc_word(const Partition& p) {
  const BoundaryWord w = psi(p);
  for (long k = 0; k <= word_span(w); ++k)
    if (w.letter(-k - 1) != 1 - w.letter(k)) return false;
  return true;
}

bool is_dd_word(const Partition& p) {
  const BoundaryWord w = psi(p);
  if (w.letter(0) != 1) return false;
  for (long k = 1; k <= word_span(w); ++k)
    if (w.letter(-k) != 1 - w.letter(k)) return false;
  return true;
}

bool is_ddtr_word(const Partition& p) {
  const BoundaryWord w = psi(p);
  if (w.letter(-1) != 0) return false;
  for (long k = 0; k <= word_span(w); ++k)
    if (w.letter(-k - 2) != 1 - w.letter(k)) return false;
  return true;
}

// ---- shifted hooks

Multiset shifted_hooks(const Partition& lb) {
  const int ell = static_cast<int>(lb.size());
  Multiset hs;
  for (int i = 0; i < ell; ++i)
    for (int j = i; j < i + lb[i]; ++j) {
      const int arm = i + lb[i] - 1 - j;
      int leg = 0;
      for (int k = i + 1; k < ell; ++k)
        if (k <= j && j <= k + lb[k] - 1) ++leg;
      const int extra = (j + 1 < ell) ? lb[j + 1] : 0;
      hs.push_back(arm + leg + 1 + extra);
    }
  std::sort(hs.begin(), hs.end());
  return hs;
}

Multiset shifted_hooks_tr(const Partition& lb) {
  Multiset hs = shifted_hooks(lb);
  for (int part : lb) {
    auto it = std::find(hs.begin(), hs.end(), part);
    if (it == hs.end()) throw std::logic_error("part missing from shifted hooks");
    hs.erase(it);
  }
  return hs;
}

Multiset multiset_union(Multiset a, const Multiset& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

Multiset dd_hook_multiset(const Partition& lb) {
  const Multiset sh = shifted_hooks(lb);
  Multiset out = multiset_union(sh, sh);
  for (int part : lb) out.push_back(2 * part);
  std::sort(out.begin(), out.end());
  for (int part : lb) out.erase(std::find(out.begin(), out.end(), part));
  return out;
}

Partition lowered(const Partition& lb) {
  Partition out;
  for (int x : lb)
    if (x > 1) out.push_back(x - 1);
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::D: return "d";
    case Family::DR: return "d,r";
    case Family::DTR: return "d,tr";
    case Family::DTRR: return "d,tr,r";
    case Family::S: return "s";
  }
  return "?";
}

bool in_family(const Partition& lb, Family f, int g) {
  auto contains = [](const Multiset& m, int x) { return std::find(m.begin(), m.end(), x) != m.end(); };
  const bool half_part = g % 2 == 0 && std::find(lb.begin(), lb.end(), g / 2) != lb.end();
  switch (f) {
    case Family::D: return !contains(shifted_hooks(lb), g);
    case Family::DR: return !contains(shifted_hooks(lb), g) && !half_part;
    case Family::DTR: return !contains(shifted_hooks_tr(lb), g);
    case Family::DTRR: return !contains(shifted_hooks_tr(lb), g) && !half_part;
    case Family::S: return is_core(sc_from_distinct(lb), g);
  }
  return false;
}

}  // namespace affgrass
