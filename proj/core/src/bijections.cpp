#include "affgrass/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "affgrass/littlewood.hpp"

namespace affgrass {

namespace {

// host rank used by the folded model (G21 and D43 live on modulus 6)
int host_rank(const AffineType& t) { return fixed_rank(t.kind) ? 3 : t.rank; }

Partition rectangle(long m) {
  // m rows of length m - 1
  return m <= 1 ? Partition{} : Partition(m, static_cast<int>(m - 1));
}

Partition square(long side) { return side <= 0 ? Partition{} : Partition(side, static_cast<int>(side)); }

long rectangle_param(const Partition& p) {
  if (p.empty()) return 1;
  const long m = static_cast<long>(p.size());
  if (p != rectangle(m)) throw std::invalid_argument("quotient component is not an (m-1) x m rectangle");
  return m;
}

long square_param(const Partition& p) {
  const long s = static_cast<long>(p.size());
  if (p != square(s)) throw std::invalid_argument("quotient component is not a square");
  return s;
}

Partition unwrap(const std::optional<Partition>& p, const char* what) {
  if (!p) throw std::invalid_argument(std::string("not a ") + what + " partition");
  return *p;
}

long sum_of(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

std::vector<long> mirrored(const std::vector<long>& ms) {
  std::vector<long> out;
  for (auto it = ms.rbegin(); it != ms.rend(); ++it) out.push_back(-*it);
  return out;
}

Charge concat(std::initializer_list<std::vector<long>> parts) {
  Charge out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

void require_model(const AffineType& t, const Partition& core) {
  if (!in_core_model(t, core))
    throw std::invalid_argument(format_partition(core) + " is not in the core model of " + display_name(t));
}

// B1, A2odd, G21: conjugate doubled distinct partition carrying a rectangle
Partition ddtr_route(const Charge& M, int n, bool trailing_zero_pair) {
  const long m = M[0] >= 1 ? M[0] : 1 - M[0];
  const std::vector<long> ms(M.begin() + 1, M.begin() + n);
  const std::vector<long> shifts = trailing_zero_pair ? concat({ms, {0}, mirrored(ms), {0}}) : concat({ms, mirrored(ms), {0}});
  std::vector<Partition> quot(shifts.size());
  quot.back() = rectangle(m);
  return unwrap(distinct_from_ddtr(compose_from_shifts(shifts, quot)), "conjugate doubled distinct");
}

long parity_pick(long m, long s) { return (m - s) % 2 == 0 ? m : 1 - m; }

}  // namespace

std::optional<FamilySpec> constructed_family(const AffineType& t) {
  const int n = t.rank;
  switch (t.kind) {
    case Kind::A1: return std::nullopt;
    case Kind::C1: return FamilySpec{Family::S, 2 * n};
    case Kind::D2: return FamilySpec{Family::DR, 2 * n + 2};
    case Kind::A2: return FamilySpec{Family::DR, 2 * n + 1};
    case Kind::A2p: return FamilySpec{Family::S, 2 * n + 1};
    case Kind::B1: return FamilySpec{Family::DTRR, 2 * n};
    case Kind::A2odd: return FamilySpec{Family::DTRR, 2 * n - 1};
    case Kind::D1: return FamilySpec{Family::DTR, 2 * n - 2};
    case Kind::G21: return FamilySpec{Family::DTRR, 6};
    case Kind::D43: return FamilySpec{Family::DTR, 4};
  }
  return std::nullopt;
}

std::optional<FamilySpec> table_family(const AffineType& t) {
  const int n = t.rank;
  switch (t.kind) {
    case Kind::A2: return FamilySpec{Family::S, 2 * n + 1};
    case Kind::A2p: return FamilySpec{Family::DR, 2 * n + 1};
    case Kind::G21:
    case Kind::D43: return std::nullopt;
    default: return constructed_family(t);
  }
}

Charge g_map(long m, const std::vector<long>& ms) {
  if (m < 1) throw std::invalid_argument("g_map needs m >= 1");
  const long first = parity_pick(m, sum_of(ms));
  return concat({{first}, ms, mirrored(ms), {-first}});
}

TypedDistinct core_to_distinct(const AffineType& t, const Partition& core) {
  require_model(t, core);
  TypedDistinct out;
  out.type = t;
  const int n = host_rank(t);
  if (t.kind == Kind::A1) throw std::invalid_argument("type A has no distinct-partition model");
  if (t.kind == Kind::C1) {
    out.lambda_bar = unwrap(distinct_from_sc(core), "self-conjugate");
    out.weight = weight(core);
    return out;
  }
  const Charge M = phi(core, 2 * n);
  const std::vector<long> head(M.begin(), M.begin() + n), tail(M.begin() + n, M.end());
  switch (t.kind) {
    case Kind::D2:
      out.c_prime = phi_inv(concat({{0}, head, {0}, tail}));
      out.lambda_bar = unwrap(distinct_from_dd(*out.c_prime), "doubled distinct");
      break;
    case Kind::A2:
      out.c_prime = phi_inv(concat({{0}, M}));
      out.lambda_bar = unwrap(distinct_from_dd(*out.c_prime), "doubled distinct");
      break;
    case Kind::A2p:
      out.c_prime = phi_inv(concat({head, {0}, tail}));
      out.lambda_bar = unwrap(distinct_from_sc(*out.c_prime), "self-conjugate");
      out.weight = weight(*out.c_prime);
      return out;
    case Kind::B1:
    case Kind::G21: out.lambda_bar = ddtr_route(M, n, true); break;
    case Kind::A2odd: out.lambda_bar = ddtr_route(M, n, false); break;
    case Kind::D43: {
      const long b1 = M[0], b2 = M[1];
      const long m = b1 >= 1 ? b1 : 1 - b1;
      const long side = std::abs(b1 - b2);
      std::vector<Partition> quot{{}, square(side), {}, rectangle(m)};
      out.lambda_bar = unwrap(distinct_from_ddtr(compose_from_shifts({b2, 0, -b2, 0}, quot)), "conjugate doubled distinct");
      break;
    }
    case Kind::D1: {
      const int N = 2 * n - 2;
      const long m = M[0] >= 1 ? M[0] : 1 - M[0];
      const std::vector<long> ms(M.begin() + 1, M.begin() + n - 1);
      std::vector<Partition> quot(N);
      quot[N - 1] = rectangle(m);
      quot[N / 2 - 1] = square(std::abs(M[n - 1]));
      out.lambda_bar = unwrap(distinct_from_ddtr(compose_from_shifts(concat({ms, {0}, mirrored(ms), {0}}), quot)),
                              "conjugate doubled distinct");
      break;
    }
    default: break;
  }
  out.weight = weight(out.lambda_bar);
  return out;
}

Partition distinct_to_core(const AffineType& t, const Partition& lb) {
  if (!is_distinct(lb)) throw std::invalid_argument("parts must be distinct");
  const int n = host_rank(t);
  Partition core;
  switch (t.kind) {
    case Kind::A1: throw std::invalid_argument("type A has no distinct-partition model");
    case Kind::C1: core = sc_from_distinct(lb); break;
    case Kind::D2: {
      const Charge Mp = phi(double_distinct(lb), 2 * n + 2);
      if (Mp[0] != 0 || Mp[n + 1] != 0) throw std::invalid_argument("charge has no zeros at 0 and n+1");
      Charge M(Mp.begin() + 1, Mp.begin() + n + 1);
      M.insert(M.end(), Mp.begin() + n + 2, Mp.end());
      core = phi_inv(M);
      break;
    }
    case Kind::A2: {
      const Charge Mp = phi(double_distinct(lb), 2 * n + 1);
      if (Mp[0] != 0) throw std::invalid_argument("charge does not start with 0");
      core = phi_inv(Charge(Mp.begin() + 1, Mp.end()));
      break;
    }
    case Kind::A2p: {
      Charge Mp = phi(sc_from_distinct(lb), 2 * n + 1);
      if (Mp[n] != 0) throw std::invalid_argument("charge has no zero at n");
      Mp.erase(Mp.begin() + n);
      core = phi_inv(Mp);
      break;
    }
    case Kind::B1:
    case Kind::A2odd:
    case Kind::G21: {
      const int g = t.kind == Kind::A2odd ? 2 * n - 1 : 2 * n;
      const LittlewoodData d = decompose(ddtr_from_distinct(lb), g);
      for (int k = 0; k + 1 < g; ++k)
        if (!d.quotient[k].empty()) throw std::invalid_argument("quotient is not concentrated on the last runner");
      const long m = rectangle_param(d.quotient.back());
      const std::vector<long> ms(d.shifts.begin(), d.shifts.begin() + n - 1);
      core = phi_inv(g_map(m, ms));
      break;
    }
    case Kind::D43: {
      const LittlewoodData d = decompose(ddtr_from_distinct(lb), 4);
      if (!d.quotient[0].empty() || !d.quotient[2].empty()) throw std::invalid_argument("unexpected quotient shape");
      const long side = square_param(d.quotient[1]);
      const long m = rectangle_param(d.quotient[3]);
      const long b2 = d.shifts[0];
      long b1 = 0;
      if (std::abs(m - b2) == side)
        b1 = m;
      else if (std::abs(1 - m - b2) == side)
        b1 = 1 - m;
      else
        throw std::invalid_argument("square size does not match the charge");
      core = phi_inv({b1, b2, b1 - b2, b2 - b1, -b2, -b1});
      break;
    }
    case Kind::D1: {
      const int N = 2 * n - 2;
      const LittlewoodData d = decompose(ddtr_from_distinct(lb), N);
      for (int k = 0; k + 1 < N; ++k)
        if (k != N / 2 - 1 && !d.quotient[k].empty()) throw std::invalid_argument("unexpected quotient shape");
      const long m = rectangle_param(d.quotient.back());
      const long side = square_param(d.quotient[N / 2 - 1]);
      const std::vector<long> ms(d.shifts.begin(), d.shifts.begin() + n - 2);
      // the sign of the middle charge is not recorded; the positive one is taken
      const long first = parity_pick(m, sum_of(ms) + side);
      core = phi_inv(concat({{first}, ms, {side, -side}, mirrored(ms), {-first}}));
      break;
    }
  }
  require_model(t, core);
  return core;
}

Partition doubled_form(const AffineType& t, const Partition& lb) {
  switch (t.kind) {
    case Kind::C1:
    case Kind::A2p: return sc_from_distinct(lb);
    case Kind::D2:
    case Kind::A2: return double_distinct(lb);
    case Kind::A1: throw std::invalid_argument("type A has no distinct-partition model");
    default: return ddtr_from_distinct(lb);
  }
}

namespace {

Multiset doubled_parts(const Partition& lb) {
  Multiset out;
  for (int x : lb) out.push_back(2 * x);
  std::sort(out.begin(), out.end());
  return out;
}

long ell(const Partition& lb) { return static_cast<long>(lb.size()); }

}  // namespace

std::optional<long> signature_exponent_table(const AffineType& t, const Partition& core) {
  const int n = t.rank;
  if (t.kind == Kind::A1) {
    require_model(t, core);
    return count_below(hooks(core), n);
  }
  if (t.kind == Kind::G21 || t.kind == Kind::D43) return std::nullopt;
  const Partition lb = core_to_distinct(t, core).lambda_bar;
  switch (t.kind) {
    case Kind::B1: return count_below(multiset_union(shifted_hooks_tr(lb), doubled_parts(lb)), 2 * n) + ell(lb);
    case Kind::A2odd: return count_below(shifted_hooks_tr(lb), 2 * n - 1);
    case Kind::C1: return count_below(shifted_hooks(lb), 2 * n);
    case Kind::D2: return count_below(multiset_union(shifted_hooks(lb), doubled_parts(lb)), 2 * n + 2) + ell(lb);
    case Kind::A2: return count_below(shifted_hooks(lb), 2 * n + 1);
    case Kind::A2p: return count_below(multiset_union(shifted_hooks(lb), doubled_parts(lb)), 2 * n + 1) + ell(lb);
    case Kind::D1: return count_below(multiset_union(shifted_hooks_tr(lb), doubled_parts(lb)), 2 * n - 2);
    default: return std::nullopt;
  }
}

std::optional<long> signature_exponent_corrected(const AffineType& t, const Partition& core) {
  const int n = t.rank;
  switch (t.kind) {
    case Kind::A1:
    case Kind::D2:
    case Kind::A2: return signature_exponent_table(t, core);
    case Kind::D1: return std::nullopt;
    default: break;
  }
  const Partition lb = core_to_distinct(t, core).lambda_bar;
  switch (t.kind) {
    case Kind::B1: return count_below(multiset_union(shifted_hooks_tr(lb), doubled_parts(lb)), 2 * n);
    case Kind::A2odd: return count_below(shifted_hooks_tr(lb), 2 * n - 1) + ell(lb);
    case Kind::C1: return count_below(shifted_hooks(lowered(lb)), 2 * n) + ell(lb);
    case Kind::A2p: {
      const long small = std::count_if(lb.begin(), lb.end(), [&](int x) { return 2 * x < 2 * n + 1; });
      return count_below(shifted_hooks(lowered(lb)), 2 * n + 1) + small;
    }
    case Kind::G21: return count_below(shifted_hooks_tr(lb), 6) + ell(lb);
    case Kind::D43: return count_below(shifted_hooks_tr(lb), 4) + ell(lb);
    default: return std::nullopt;
  }
}

std::string signature_formula_table(const AffineType& t) {
  switch (t.kind) {
    case Kind::A1: return "#H_n(c)";
    case Kind::B1: return "#H_2n(tr u D) + l";
    case Kind::A2odd: return "#H_{2n-1}(tr)";
    case Kind::C1: return "#H_2n(lb)";
    case Kind::D2: return "#H_{2n+2}(lb u D) + l";
    case Kind::A2: return "#H_{2n+1}(lb)";
    case Kind::A2p: return "#H_{2n+1}(lb u D) + l";
    case Kind::D1: return "#H_{2n-2}(tr u D)";
    default: return "(no row)";
  }
}

std::string signature_formula_corrected(const AffineType& t) {
  switch (t.kind) {
    case Kind::B1: return "#H_2n(tr u D)";
    case Kind::A2odd: return "#H_{2n-1}(tr) + l";
    case Kind::C1: return "#H_2n(lb - 1) + l";
    case Kind::A2p: return "#H_{2n+1}(lb - 1) + #{2 lb_i < 2n+1}";
    case Kind::G21: return "#H_6(tr) + l";
    case Kind::D43: return "#H_4(tr) + l";
    case Kind::D1: return "(unknown)";
    default: return signature_formula_table(t);
  }
}

std::vector<long> v_coding(const Partition& p, int g, int n) {
  if (n > g || n < 1) throw std::invalid_argument("v_coding needs 1 <= n <= g");
  const BoundaryWord w = psi(p);
  std::vector<long> ms;
  for (int i = 0; i < g; ++i) {
    const long k_hi = floor_div(w.hi() - i, g) + 1;
    long best = 0;
    bool found = false;
    for (long k = floor_div(w.lo - i, g) - 1; k <= k_hi; ++k)
      if (w.letter(k * g + i) == 0) {
        best = (k + 1) * g + i;
        found = true;
      }
    if (!found) throw std::logic_error("runner without a zero letter");
    ms.push_back(best);
  }
  std::sort(ms.rbegin(), ms.rend());
  ms.resize(n);
  return ms;
}

std::vector<long> correspondence_coding(const AffineType& t, const Partition& core) {
  const CartanData& d = registry(t);
  const int g = static_cast<int>(to_ll(d.eta_tilde));
  if (t.kind == Kind::A1) {
    require_model(t, core);
    return v_coding(core, g, d.epsilon_dim());
  }
  const AffineType dual{dual_kind(t.kind), t.rank};
  const Partition lb = core_to_distinct(dual, core).lambda_bar;
  return v_coding(doubled_form(dual, lb), g, d.epsilon_dim());
}

QVec correspondence_weight(const AffineType& t, const Partition& core) {
  const CartanData& d = registry(t);
  const int g = static_cast<int>(to_ll(d.eta_tilde));
  const int dim = d.epsilon_dim();
  const std::vector<long> v = correspondence_coding(t, core);
  QVec target(dim);
  for (int i = 0; i < dim; ++i) target[i] = v[i] + (i + 1) - g;
  if (t.kind == Kind::A1) {
    // gl_n coordinates: the coding sees the weight through -w0
    QVec flipped(dim);
    for (int i = 0; i < dim; ++i) flipped[i] = -target[dim - 1 - i];
    return flipped;
  }
  return target;
}

}  // namespace affgrass
