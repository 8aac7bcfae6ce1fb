#include "affgrass/grassmannian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "affgrass/charges.hpp"
#include "affgrass/linalg.hpp"
#include "affgrass/littlewood.hpp"

namespace affgrass {

Partition reflect_ambient(const Partition& core, int j, int N) {
  const int ell = static_cast<int>(core.size());
  auto part = [&](int r) { return r < ell ? core[r] : 0; };
  std::vector<int> add, rem;
  for (int r = 0; r <= ell; ++r)
    if ((r == 0 || part(r - 1) > part(r)) && floor_mod(part(r) - r - j, N) == 0) add.push_back(r);
  for (int r = 0; r < ell; ++r)
    if (part(r) > part(r + 1) && floor_mod(part(r) - 1 - r - j, N) == 0) rem.push_back(r);
  if (!add.empty() && !rem.empty()) throw std::invalid_argument("not an N-core: both addable and removable nodes");
  Partition out(core);
  out.push_back(0);
  for (int r : add) ++out[r];
  for (int r : rem) --out[r];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Partition reflect(const AffineType& t, int i, const Partition& core) {
  const CartanData& d = registry(t);
  const auto& word = d.generator_words.at(i);
  Partition c = core;
  for (auto it = word.rbegin(); it != word.rend(); ++it) c = reflect_ambient(c, *it, d.modulus);
  return c;
}

bool in_core_model(const AffineType& t, const Partition& core) {
  const CartanData& d = registry(t);
  if (!is_partition(core) || !is_core(core, d.modulus)) return false;
  switch (d.core_model) {
    case CoreModel::Cores: return true;
    case CoreModel::SelfConjugate: return conjugate(core) == core;
    case CoreModel::SelfConjugateEvenDiagonal: return conjugate(core) == core && durfee_size(core) % 2 == 0;
    case CoreModel::G2Pattern: {
      const Charge m = phi(core, 6);
      return m[2] == m[0] - m[1] && m[3] == m[1] - m[0] && m[4] == -m[1] && m[5] == -m[0];
    }
  }
  return false;
}

namespace {

void require_model(const AffineType& t, const Partition& core) {
  if (!in_core_model(t, core))
    throw std::invalid_argument(format_partition(core) + " is not in the core model of " + display_name(t));
}

}  // namespace

QVec typed_coefficients(const AffineType& t, const Partition& core) {
  require_model(t, core);
  const CartanData& d = registry(t);
  const std::vector<int> a = residue_counts(core, d.modulus);
  QVec rhs(d.modulus);
  for (int j = 0; j < d.modulus; ++j) rhs[j] = d.lambda0_scale * a[j];
  return linalg::solve(linalg::transpose(d.fold_roots), rhs);
}

Rational atomic_length_closed(const AffineType& t, const Partition& core) {
  require_model(t, core);
  const CartanData& d = registry(t);
  const std::vector<int> a = residue_counts(core, d.modulus);
  const int size = weight(core);
  const int a0 = a[0], an = a[d.modulus / 2];
  switch (t.kind) {
    case Kind::A1:
    case Kind::C1: return size;
    case Kind::D2: return Rational(size + a0 + an, 2);
    case Kind::A2: return Rational(size + a0, 2);
    case Kind::A2p: return size + an;
    case Kind::B1:
    case Kind::G21: return Rational(size - a0 + an, 2);
    case Kind::A2odd: return Rational(size - a0, 2);
    case Kind::D1:
    case Kind::D43: return Rational(size - a0 - an, 2);
  }
  return 0;
}

Rational atomic_length_pi(const AffineType& t, const Partition& core) {
  require_model(t, core);
  const CartanData& d = registry(t);
  const std::vector<int> a = residue_counts(core, d.modulus);
  Rational s = 0;
  for (int j = 0; j < d.modulus; ++j) s += d.pi[j] * a[j];
  return s;
}

Rational atomic_length_roots(const AffineType& t, const Partition& core) {
  Rational s = 0;
  for (const auto& x : typed_coefficients(t, core)) s += x;
  return s;
}

Rational dual_atomic_length(const AffineType& t, const Partition& core) {
  const CartanData& d = registry(t);
  const QVec c = typed_coefficients(t, core);
  Rational s = 0;
  for (int i = 0; i < d.nodes(); ++i) s += c[i] * d.root_norms[i] / 2;
  return s;
}

std::vector<OrbitEntry> orbit(const AffineType& t, const Rational& bound, Grading grading) {
  const CartanData& d = registry(t);
  auto grade = [&](const Partition& c) {
    return grading == Grading::Length ? atomic_length_roots(t, c) : dual_atomic_length(t, c);
  };
  std::map<Partition, int> depth{{Partition{}, 0}};
  std::vector<Partition> frontier{Partition{}};
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& c : frontier)
      for (int i = 0; i < d.nodes(); ++i) {
        Partition e = reflect(t, i, c);
        if (depth.count(e) || grade(e) > bound) continue;
        depth[e] = depth[c] + 1;
        next.push_back(std::move(e));
      }
    frontier = std::move(next);
  }
  std::vector<OrbitEntry> out;
  out.reserve(depth.size());
  for (const auto& [c, k] : depth) out.push_back({c, atomic_length_roots(t, c), dual_atomic_length(t, c), k});
  std::sort(out.begin(), out.end(), [&](const OrbitEntry& x, const OrbitEntry& y) {
    const Rational& gx = grading == Grading::Length ? x.length : x.dual_length;
    const Rational& gy = grading == Grading::Length ? y.length : y.dual_length;
    return gx != gy ? gx < gy : x.core < y.core;
  });
  return out;
}

QVec apply_word(const CartanData& d, const std::vector<int>& word, const QVec& v) {
  QVec w = v;
  for (int j : word) w = reflect(w, d.simple_roots[j]);
  return w;
}

QVec apply_element(const CartanData& d, const std::vector<int>& word, const QVec& v) {
  QVec w = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = reflect(w, d.simple_roots[*it]);
  return w;
}

QVec beta_of_core(const AffineType& t, const Partition& core) {
  const CartanData& d = registry(t);
  const QVec c = typed_coefficients(t, core);
  QVec beta(d.epsilon_dim(), Rational(0));
  for (int i = 1; i < d.nodes(); ++i) {
    const Rational coeff = c[0] / d.marks[0] * d.marks[i] - c[i];
    beta = add(beta, scale(coeff, d.simple_roots[i - 1]));
  }
  return beta;
}

long translation_length(const AffineType& t, const std::vector<int>& u, const QVec& gamma) {
  const CartanData& d = registry(t);
  Rational total = 0;
  for (const auto& alpha : d.positive_roots) {
    const Rational pairing = d.kappa(dot(alpha, alpha)) * d.norm_factor * dot(gamma, alpha);
    const int chi = is_positive_root(d, apply_element(d, u, alpha)) ? 0 : 1;
    total += abs(pairing + chi);
  }
  return to_ll(total);
}

GrassmannianElement decompose(const AffineType& t, const QVec& beta) {
  const CartanData& d = registry(t);
  if (static_cast<int>(beta.size()) != d.epsilon_dim()) throw std::invalid_argument("beta has the wrong dimension");
  GrassmannianElement g;
  g.type = t;
  g.beta = beta;
  g.nu = beta;
  for (;;) {
    int j = 0;
    while (j < d.finite_rank && dot(g.nu, d.simple_roots[j]) <= 0) ++j;
    if (j == d.finite_rank) break;
    g.nu = reflect(g.nu, d.simple_roots[j]);
    g.u.push_back(j);
  }
  g.length = static_cast<int>(translation_length(t, g.u, g.nu));
  g.signature = g.length % 2 ? -1 : 1;
  return g;
}

GrassmannianElement lattice_element(const AffineType& t, const Partition& core) {
  return decompose(t, beta_of_core(t, core));
}

QVec dominant_weight(const GrassmannianElement& g) {
  const CartanData& d = registry(g.type);
  return sub(add(scale(-d.eta_dual, g.nu), apply_word(d, g.u, d.rho)), d.rho);
}

QVec correspondence_lattice(const GrassmannianElement& g) {
  const CartanData& d = registry(g.type);
  const bool halved = g.type.kind == Kind::C1 || g.type.kind == Kind::A2p;
  const Rational s = halved ? Rational(1, 2) : Rational(1);
  return sub(add(scale(-d.eta_tilde * s, g.nu), apply_word(d, g.u, d.rho)), d.rho);
}

Rational dual_length_closed(const AffineType& t, const QVec& beta) {
  const CartanData& d = registry(t);
  return d.eta_dual / 2 * d.norm_factor * dot(beta, beta) - d.norm_factor * dot(beta, d.rho);
}

}  // namespace affgrass
