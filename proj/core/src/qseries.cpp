#include "affgrass/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "affgrass/bijections.hpp"
#include "affgrass/grassmannian.hpp"
#include "affgrass/linalg.hpp"

namespace affgrass {

std::vector<WeylElement> weyl_group(const CartanData& d) {
  std::vector<WeylElement> out{{{}, 1}};
  std::map<QVec, std::size_t> seen{{d.rho, 0}};
  std::vector<QVec> images{d.rho};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int j = 0; j < d.finite_rank; ++j) {
      QVec img = reflect(images[k], d.simple_roots[j]);
      if (seen.count(img)) continue;
      WeylElement w;
      w.word = {j};
      w.word.insert(w.word.end(), out[k].word.begin(), out[k].word.end());
      w.sign = -out[k].sign;
      seen.emplace(img, out.size());
      images.push_back(std::move(img));
      out.push_back(std::move(w));
    }
  return out;
}

std::optional<Straightened> straighten(const CartanData& d, const QVec& gamma) {
  QVec v = add(gamma, d.rho);
  int sign = 1;
  for (;;) {
    int j = 0;
    while (j < d.finite_rank && dot(v, d.simple_roots[j]) >= 0) ++j;
    if (j == d.finite_rank) break;
    v = reflect(v, d.simple_roots[j]);
    sign = -sign;
  }
  for (const auto& a : d.simple_roots)
    if (dot(v, a) == 0) return std::nullopt;
  return Straightened{sign, sub(v, d.rho)};
}

namespace {

LaurentPoly::Exponent doubled(const QVec& v) {
  LaurentPoly::Exponent e;
  for (const auto& x : v) e.push_back(to_ll(2 * x));
  return e;
}

const std::vector<WeylElement>& cached_weyl(const CartanData& d) {
  static std::mutex mu;
  static std::map<AffineType, std::vector<WeylElement>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d.type);
  if (it == cache.end()) it = cache.emplace(d.type, weyl_group(d)).first;
  return it->second;
}

// P / (1 - x^{-alpha}) when the division is exact: Q(m) = sum_{k>=0} P(m + k alpha)
LaurentPoly divide_one_minus(const LaurentPoly& P, const LaurentPoly::Exponent& alpha) {
  if (P.is_zero()) return P;
  auto proj = [&](const LaurentPoly::Exponent& e) {
    long s = 0;
    for (std::size_t k = 0; k < e.size(); ++k) s += e[k] * alpha[k];
    return s;
  };
  auto shifted = [&](LaurentPoly::Exponent e, long k) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += k * alpha[i];
    return e;
  };
  long lo = proj(P.terms().begin()->first), hi = lo;
  for (const auto& [e, c] : P.terms()) {
    lo = std::min(lo, proj(e));
    hi = std::max(hi, proj(e));
  }
  const long step = proj(alpha);
  std::set<LaurentPoly::Exponent> candidates;
  for (const auto& [e, c] : P.terms())
    for (long k = 0; proj(shifted(e, -k)) >= lo; ++k) candidates.insert(shifted(e, -k));
  LaurentPoly Q(P.nvars());
  for (const auto& m : candidates) {
    Rational s = 0;
    for (long k = 0; proj(m) + k * step <= hi; ++k) s += P.coeff(shifted(m, k));
    Q.add_term(m, s);
  }
  LaurentPoly check = Q - Q * LaurentPoly::monomial(shifted(LaurentPoly::Exponent(alpha.size(), 0), -1));
  if (check != P) throw std::logic_error("character division is not exact");
  return Q;
}

}  // namespace

LaurentPoly alternant(const CartanData& d, const QVec& gamma) {
  LaurentPoly out(d.epsilon_dim());
  for (const auto& w : cached_weyl(d)) out.add_term(doubled(apply_element(d, w.word, gamma)), w.sign);
  return out;
}

LaurentPoly character(const CartanData& d, const QVec& lambda) {
  LaurentPoly P = alternant(d, add(lambda, d.rho)) * LaurentPoly::monomial(doubled(scale(-1, d.rho)));
  for (const auto& a : d.positive_roots) P = divide_one_minus(P, doubled(a));
  return P;
}

Rational weyl_dimension(const CartanData& d, const QVec& lambda) {
  Rational num = 1, den = 1;
  const QVec shifted = add(lambda, d.rho);
  for (const auto& a : d.positive_roots) {
    num *= dot(shifted, a);
    den *= dot(d.rho, a);
  }
  return num / den;
}

CharacterSum delta_grassmannian(const AffineType& t, int order) {
  CharacterSum sum;
  for (const auto& e : orbit(t, order, Grading::DualLength)) {
    const GrassmannianElement g = lattice_element(t, e.core);
    sum[{e.dual_length, dominant_weight(g)}] += g.signature;
  }
  for (auto it = sum.begin(); it != sum.end();) it = it->second == 0 ? sum.erase(it) : std::next(it);
  return sum;
}

CharacterSum delta_translation(const AffineType& t, int order) {
  const CartanData& d = registry(t);
  const int rank = d.finite_rank;
  // lattice basis in epsilon coordinates
  QMat basis;
  for (const auto& row : d.mstar_basis) {
    QVec v(d.epsilon_dim(), Rational(0));
    for (int i = 0; i < rank; ++i) v = add(v, scale(row[i], d.simple_roots[i]));
    basis.push_back(v);
  }
  // |beta| bound from eta_dual f |beta|^2 / 2 - f |beta| |rho| <= order
  const double a = (d.eta_dual * d.norm_factor / 2).convert_to<double>();
  const double b = d.norm_factor.convert_to<double>() * std::sqrt(dot(d.rho, d.rho).convert_to<double>());
  const double radius = (b + std::sqrt(b * b + 4 * a * order)) / (2 * a);
  QMat gram(rank, QVec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) gram[i][j] = dot(basis[i], basis[j]);
  std::vector<long> bound(rank);
  for (int i = 0; i < rank; ++i) {
    QVec unit(rank, Rational(0));
    unit[i] = 1;
    const double inv_ii = linalg::solve(gram, unit)[i].convert_to<double>();
    bound[i] = static_cast<long>(std::floor(radius * std::sqrt(inv_ii))) + 1;
  }
  CharacterSum sum;
  std::vector<long> coords(rank);
  std::function<void(int)> visit = [&](int i) {
    if (i == rank) {
      QVec beta(d.epsilon_dim(), Rational(0));
      for (int k = 0; k < rank; ++k) beta = add(beta, scale(coords[k], basis[k]));
      const Rational exponent = dual_length_closed(t, beta);
      if (exponent > order) return;
      Rational steps = 0;
      for (const auto& alpha : d.positive_roots) steps += abs(d.kappa(dot(alpha, alpha)) * d.norm_factor * dot(beta, alpha));
      const int sign = to_ll(steps) % 2 ? -1 : 1;
      const auto st = straighten(d, scale(-d.eta_dual, beta));
      if (!st) return;
      sum[{exponent, st->weight}] += sign * st->sign;
      return;
    }
    for (long c = -bound[i]; c <= bound[i]; ++c) {
      coords[i] = c;
      visit(i + 1);
    }
  };
  visit(0);
  for (auto it = sum.begin(); it != sum.end();) it = it->second == 0 ? sum.erase(it) : std::next(it);
  return sum;
}

TruncatedSeries<LaurentPoly> expand_characters(const AffineType& t, const CharacterSum& sum, int order) {
  const CartanData& d = registry(t);
  TruncatedSeries<LaurentPoly> out(2 * order, LaurentPoly(d.epsilon_dim()));
  for (const auto& [key, coeff] : sum) {
    const auto& [exponent, weight] = key;
    const Rational steps = 2 * exponent;
    if (!is_integral(steps)) throw std::domain_error("q exponent " + to_string(exponent) + " is not in Z/2");
    const long k = to_ll(steps);
    if (k > 2 * order) continue;
    out[static_cast<int>(k)] += character(d, weight) * Rational(coeff);
  }
  return out;
}

namespace {

std::string describe(const QVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

DeltaReport delta_check(const AffineType& t, int order) {
  DeltaReport r;
  const CharacterSum G = delta_grassmannian(t, order);
  const CharacterSum T = delta_translation(t, order);
  r.grassmannian_terms = G.size();
  r.translation_terms = T.size();
  r.characters_equal = G == T;
  if (!r.characters_equal) {
    std::set<std::pair<Rational, QVec>> keys;
    for (const auto& [k, v] : G) keys.insert(k);
    for (const auto& [k, v] : T) keys.insert(k);
    for (const auto& k : keys) {
      const Int a = G.count(k) ? G.at(k) : Int(0), b = T.count(k) ? T.at(k) : Int(0);
      if (a != b) {
        r.first_mismatch = "q^" + to_string(k.first) + " s" + describe(k.second) + ": " + to_string(a) + " vs " + to_string(b);
        break;
      }
    }
  }
  r.laurent_equal = expand_characters(t, G, order) == expand_characters(t, T, order);
  if (!r.laurent_equal && r.first_mismatch.empty()) r.first_mismatch = "Laurent expansions differ";
  return r;
}

NoReport nekrasov_okounkov_check(int order) {
  NoReport r;
  r.order = order;
  const Polynomial z = Polynomial::variable();
  for (int m = 0; m <= order; ++m) {
    Polynomial total;
    for (const auto& p : partitions_of(m)) {
      Polynomial prod(1);
      for (int h : hooks(p)) prod *= Polynomial(1) - z * Rational(1, h * h);
      total += prod;
    }
    r.lhs.push_back(total);
  }
  const TruncatedSeries<Rational> euler = euler_product(order);
  TruncatedSeries<Polynomial> log_euler(order, Polynomial());
  for (int k = 0; k <= order; ++k) log_euler[k] = Polynomial(euler[k]);
  log_euler = log_euler.log();
  const Polynomial z_minus_one = z - Polynomial(1);
  for (int k = 0; k <= order; ++k) log_euler[k] *= z_minus_one;
  const TruncatedSeries<Polynomial> rhs = log_euler.exp();
  for (int m = 0; m <= order; ++m) {
    r.rhs.push_back(rhs[m]);
    if (r.first_mismatch < 0 && r.lhs[m] != rhs[m]) r.first_mismatch = m;
  }
  return r;
}

bool no_core_vanishing(int n, int order) {
  const Rational z = n * n;
  for (int m = 0; m <= order; ++m)
    for (const auto& p : partitions_of(m)) {
      if (is_core(p, n)) continue;
      Rational prod = 1;
      for (int h : hooks(p)) prod *= 1 - z / (h * h);
      if (prod != 0) return false;
    }
  return true;
}

namespace {

// series in (q, u, z), kept modulo q^{q_max+1} and u^{u_max+1}
struct Window {
  long q_max, u_max;
  bool inside(const LaurentPoly::Exponent& e) const { return e[0] <= q_max && e[1] <= u_max; }

  LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) const {
    LaurentPoly out(3);
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) {
        LaurentPoly::Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        if (inside(e)) out.add_term(e, ca * cb);
      }
    return out;
  }
  // 1 - c * mono
  LaurentPoly one_minus(const LaurentPoly::Exponent& mono) const {
    LaurentPoly out = LaurentPoly::constant(3, 1);
    if (inside(mono)) out.add_term(mono, -1);
    return out;
  }
  // 1 / (1 - mono) for a monomial of positive (q, u) degree
  LaurentPoly inverse_one_minus(const LaurentPoly::Exponent& mono) const {
    if (mono[0] < 0 || mono[1] < 0 || mono[0] + mono[1] == 0) throw std::invalid_argument("not a topologically small monomial");
    LaurentPoly out = LaurentPoly::constant(3, 1);
    LaurentPoly::Exponent e{0, 0, 0};
    for (;;) {
      for (int k = 0; k < 3; ++k) e[k] += mono[k];
      if (!inside(e)) break;
      out.add_term(e, 1);
    }
    return out;
  }
};

}  // namespace

HandeReport hande_check(int q_order, int u_order) {
  HandeReport r;
  r.q_order = q_order;
  r.u_order = u_order;
  const Window w{q_order, u_order - 1};
  LaurentPoly lhs(3);
  for (int m = 0; m <= q_order; ++m)
    for (const auto& p : partitions_of(m)) {
      LaurentPoly term = LaurentPoly::monomial({m, 0, 0});
      for (int h : hooks(p)) {
        term = w.mul(term, w.mul(w.one_minus({0, h, 1}), w.one_minus({0, h, -1})));
        const LaurentPoly inv = w.inverse_one_minus({0, h, 0});
        term = w.mul(term, w.mul(inv, inv));
      }
      lhs += term;
    }
  LaurentPoly rhs = LaurentPoly::constant(3, 1);
  for (long k = 1; k <= q_order; ++k)
    for (long e = 1; e <= u_order + 1; ++e) {
      // one factor of the product, raised to the power e
      LaurentPoly factor = w.mul(w.one_minus({k, e, 1}), w.one_minus({k, e, -1}));
      factor = w.mul(factor, w.mul(w.inverse_one_minus({k, e - 1, 0}), w.inverse_one_minus({k, e + 1, 0})));
      for (long rep = 0; rep < e; ++rep) rhs = w.mul(rhs, factor);
    }
  r.lhs_terms = lhs.terms().size();
  r.rhs_terms = rhs.terms().size();
  const LaurentPoly diff = lhs - rhs;
  if (!diff.is_zero()) {
    const auto& [e, c] = *diff.terms().begin();
    r.first_mismatch = "q^" + std::to_string(e[0]) + " u^" + std::to_string(e[1]) + " z^" + std::to_string(e[2]) +
                       ": lhs " + to_string(lhs.coeff(e)) + ", rhs " + to_string(rhs.coeff(e));
  }
  return r;
}

MacdonaldReport macdonald_check(const AffineType& t, int order) {
  if (t.kind != Kind::A1) throw std::invalid_argument("the Macdonald specialisation is implemented for type A only");
  const CartanData& d = registry(t);
  MacdonaldReport r;
  r.order = order;
  r.dimension = d.finite_rank + 2 * static_cast<int>(d.positive_roots.size());
  r.lhs.assign(order + 1, Int(0));
  for (const auto& e : orbit(t, order, Grading::DualLength)) {
    const GrassmannianElement g = lattice_element(t, e.core);
    r.lhs[static_cast<std::size_t>(to_ll(e.dual_length))] += g.signature * to_integer(weyl_dimension(d, dominant_weight(g)));
  }
  const TruncatedSeries<Rational> power = euler_product(order).pow(r.dimension);
  for (int k = 0; k <= order; ++k) {
    r.rhs.push_back(to_integer(power[k]));
    if (r.first_mismatch < 0 && r.lhs[k] != r.rhs[k]) r.first_mismatch = k;
  }
  return r;
}

XMultiset& XMultiset::mul(long k, long times) {
  if (times == 0) return *this;
  auto [it, inserted] = exps_.emplace(k, times);
  if (!inserted) {
    it->second += times;
    if (it->second == 0) exps_.erase(it);
  }
  return *this;
}

XMultiset& XMultiset::times(const XMultiset& o, long power) {
  for (const auto& [k, e] : o.exps_) mul(k, e * power);
  return *this;
}

std::string XMultiset::to_string() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : exps_) {
    if (!first) os << " ";
    first = false;
    os << "X" << k;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

long as_index(const Rational& q) {
  if (!is_integral(q)) throw std::logic_error("non-integral X index " + to_string(q));
  return to_ll(q);
}

// Delta_T of the hook-product table, evaluated at the shifted weight
XMultiset delta_row(Kind k, const QVec& w, long g) {
  XMultiset x;
  const int n = static_cast<int>(w.size());
  auto pairs = [&](long offset) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        x.mul(as_index(w[i - 1] - w[j - 1])).mul(as_index(w[i - 1] + w[j - 1]));
        x.div(j - i).div(offset - i - j);
      }
  };
  auto singles = [&] {
    for (int i = 1; i <= n; ++i) x.mul(as_index(w[i - 1])).div(i);
  };
  switch (k) {
    case Kind::A1:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) x.mul(as_index(w[i - 1] - w[j - 1])).div(j - i);
      break;
    case Kind::B1: pairs(g + 2); break;
    case Kind::A2odd: singles(); pairs(g + 2); break;
    case Kind::C1: singles(); pairs(g); break;
    case Kind::D2: pairs(g + 1); break;
    case Kind::A2: singles(); pairs(g + 1); break;
    case Kind::A2p: pairs(g); break;
    case Kind::D1:
      for (int i = 1; i <= n; ++i) x.mul(2 * as_index(w[i - 1])).mul(i).div(2 * i).div(as_index(w[i - 1]));
      pairs(g + 2);
      break;
    default: throw std::invalid_argument("no hook-product row");
  }
  return x;
}

}  // namespace

EnumhookResult enumhook_identity(const AffineType& t, const Partition& core, AlphaRule rule) {
  EnumhookResult res;
  if (t.kind == Kind::G21 || t.kind == Kind::D43) return res;
  res.applicable = true;
  const CartanData& d = registry(t);
  const long g = to_ll(d.eta_tilde);
  const GrassmannianElement gel = lattice_element(t, core);
  const QVec shifted = add(correspondence_lattice(gel), d.rho);

  Multiset H;
  Partition lb;
  if (t.kind == Kind::A1) {
    H = hooks(core);
  } else {
    lb = core_to_distinct({dual_kind(t.kind), t.rank}, core).lambda_bar;
    H = shifted_hooks_tr(lb);
    for (long h : lb) {
      switch (t.kind) {
        case Kind::B1:
        case Kind::A2odd: res.lhs.mul(2 * h - g).mul(h + g); break;
        case Kind::D1: res.lhs.mul(2 * h + g).mul(h + g); break;
        default: res.lhs.mul(2 * h - g).mul(h - g); break;
      }
      res.lhs.div(2 * h).div(h);
    }
  }
  for (long h : H) res.lhs.mul(h - g).mul(h + g).div(h, 2);

  for (long i = 1; i < g; ++i) {
    long alpha = std::count(H.begin(), H.end(), g - i);
    if (t.kind != Kind::A1) {
      alpha += std::count_if(lb.begin(), lb.end(), [&](long h) { return 2 * h == g - i; });
      if (rule == AlphaRule::AsPrinted) alpha += std::count_if(lb.begin(), lb.end(), [&](long h) { return h == g - i; });
    }
    res.rhs.mul(-i, alpha).div(i, alpha);
  }
  res.rhs.times(delta_row(t.kind, shifted, g));
  res.residue = res.lhs;
  res.residue.times(res.rhs, -1);
  res.holds = res.residue.empty();
  return res;
}

namespace {

// Laurent polynomials in the single variable u
LaurentPoly upow(long e, const Rational& c = 1) { return LaurentPoly::monomial({e}, c); }
LaurentPoly one_minus_u(long e) { return upow(0) - upow(e); }

// det(u^{(i-1) mu_j}) by permutation expansion
LaurentPoly principal_alternant(const std::vector<long>& mu) {
  const int n = static_cast<int>(mu.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  LaurentPoly out(1);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    long e = 0;
    for (int i = 0; i < n; ++i) e += static_cast<long>(i) * mu[perm[i]];
    out.add_term({e}, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

bool u_specialized_character(const AffineType& t, const Partition& core) {
  if (t.kind != Kind::A1) throw std::invalid_argument("the specialised character is implemented for the A row only");
  const CartanData& d = registry(t);
  const long g = to_ll(d.eta_tilde);
  const int n = d.epsilon_dim();
  const QVec r = correspondence_lattice(lattice_element(t, core));
  LaurentPoly hook_num = upow(0), hook_den = upow(0);
  const Multiset H = hooks(core);
  for (long h : H) {
    hook_num = hook_num * one_minus_u(h - g) * one_minus_u(h + g);
    hook_den = hook_den * one_minus_u(h) * one_minus_u(h);
  }
  LaurentPoly prefactor = upow(0);
  for (long i = 1; i < g; ++i) {
    const long alpha = std::count(H.begin(), H.end(), g - i);
    for (long k = 0; k < alpha; ++k) prefactor = prefactor * upow(-i, -1);
  }
  std::vector<long> delta(n), shifted(n);
  long weighted = 0;
  for (int i = 0; i < n; ++i) {
    delta[i] = n - 1 - i;
    shifted[i] = as_index(r[i]) + delta[i];
    weighted += i * as_index(r[i]);
  }
  const LaurentPoly left = hook_num * principal_alternant(delta) * upow(weighted);
  const LaurentPoly right = hook_den * prefactor * principal_alternant(shifted);
  return left == right;
}

}  // namespace affgrass
