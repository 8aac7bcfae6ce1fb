#include "affgrass/affine_data.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "affgrass/linalg.hpp"

namespace affgrass {

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds = {Kind::A1,    Kind::B1, Kind::C1,  Kind::D1,  Kind::A2odd,
                                          Kind::A2,    Kind::A2p, Kind::D2, Kind::G21, Kind::D43};
  return kinds;
}

std::string kind_flag(Kind k) {
  switch (k) {
    case Kind::A1: return "A1";
    case Kind::B1: return "B1";
    case Kind::C1: return "C1";
    case Kind::D1: return "D1";
    case Kind::A2odd: return "A2odd";
    case Kind::A2: return "A2";
    case Kind::A2p: return "A2p";
    case Kind::D2: return "D2";
    case Kind::G21: return "G21";
    case Kind::D43: return "D43";
  }
  return "?";
}

Kind parse_kind(const std::string& flag) {
  for (Kind k : all_kinds())
    if (kind_flag(k) == flag) return k;
  throw std::invalid_argument("unknown type '" + flag + "'");
}

int min_rank(Kind k) {
  switch (k) {
    case Kind::B1:
    case Kind::A2odd: return 3;
    case Kind::D1: return 4;
    default: return 2;
  }
}

bool fixed_rank(Kind k) { return k == Kind::G21 || k == Kind::D43; }

AffineType make_type(Kind k, int rank) {
  if (fixed_rank(k) && rank != 2) throw std::invalid_argument(kind_flag(k) + " has fixed rank 2");
  if (rank < min_rank(k))
    throw std::invalid_argument(kind_flag(k) + " needs rank >= " + std::to_string(min_rank(k)));
  if (rank > 12) throw std::invalid_argument("rank above 12 is not supported");
  return {k, rank};
}

std::string display_name(const AffineType& t) {
  const std::string n = std::to_string(t.rank);
  switch (t.kind) {
    case Kind::A1: return "A_" + std::to_string(t.rank - 1) + "^(1)";
    case Kind::B1: return "B_" + n + "^(1)";
    case Kind::C1: return "C_" + n + "^(1)";
    case Kind::D1: return "D_" + n + "^(1)";
    case Kind::A2odd: return "A_" + std::to_string(2 * t.rank - 1) + "^(2)";
    case Kind::A2: return "A_" + std::to_string(2 * t.rank) + "^(2)";
    case Kind::A2p: return "A'_" + std::to_string(2 * t.rank) + "^(2)";
    case Kind::D2: return "D_" + std::to_string(t.rank + 1) + "^(2)";
    case Kind::G21: return "G_2^(1)";
    case Kind::D43: return "D_4^(3)";
  }
  return "?";
}

Kind dual_kind(Kind k) {
  switch (k) {
    case Kind::C1: return Kind::D2;
    case Kind::D2: return Kind::C1;
    case Kind::A2: return Kind::A2p;
    case Kind::A2p: return Kind::A2;
    case Kind::B1: return Kind::A2odd;
    case Kind::A2odd: return Kind::B1;
    case Kind::G21: return Kind::D43;
    case Kind::D43: return Kind::G21;
    default: return k;
  }
}

std::string core_model_name(CoreModel m) {
  switch (m) {
    case CoreModel::Cores: return "n-cores";
    case CoreModel::SelfConjugate: return "self-conjugate 2n-cores";
    case CoreModel::SelfConjugateEvenDiagonal: return "self-conjugate 2n-cores, even diagonal";
    case CoreModel::G2Pattern: return "6-cores with charge (b1,b2,b1-b2,b2-b1,-b2,-b1)";
  }
  return "?";
}

Rational ambient_form(int N, const QVec& u, const QVec& v) {
  Rational s = 0;
  for (int i = 0; i < N; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < N; ++j) {
      if (v[j] == 0) continue;
      int a = 0;
      if (i == j)
        a = 2;
      else if (N == 2)
        a = -2;
      else if ((i - j + N) % N == 1 || (j - i + N) % N == 1)
        a = -1;
      s += u[i] * v[j] * a;
    }
  }
  return s;
}

QVec reflect(const QVec& v, const QVec& root) {
  const Rational k = 2 * dot(v, root) / dot(root, root);
  return sub(v, scale(k, root));
}

std::string format_marks(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

namespace {

struct Fold {
  int N = 0;
  QMat roots, weights;
  std::vector<std::vector<int>> words;
};

QVec amb(int N, std::initializer_list<std::pair<int, int>> terms) {
  QVec v(N, Rational(0));
  for (auto [c, j] : terms) v[((j % N) + N) % N] += c;
  return v;
}

QVec lin(int a, const QVec& x, int b, const QVec& y) { return add(scale(a, x), scale(b, y)); }

Fold fold(Kind k, int n) {
  Fold f;
  if (k == Kind::A1) {
    f.N = n;
    for (int i = 0; i < n; ++i) {
      f.roots.push_back(amb(n, {{1, i}}));
      f.weights.push_back(amb(n, {{1, i}}));
      f.words.push_back({i});
    }
    return f;
  }
  if (k == Kind::C1 || k == Kind::D2 || k == Kind::A2 || k == Kind::A2p) {
    const int N = 2 * n;
    const int a0 = (k == Kind::C1 || k == Kind::A2p) ? 2 : 1;
    const int an = (k == Kind::C1 || k == Kind::A2) ? 2 : 1;
    f.N = N;
    f.roots.push_back(amb(N, {{a0, 0}}));
    f.weights.push_back(amb(N, {{a0, 0}}));
    f.words.push_back({0});
    for (int i = 1; i < n; ++i) {
      f.roots.push_back(amb(N, {{1, i}, {1, N - i}}));
      f.weights.push_back(amb(N, {{1, i}, {1, N - i}}));
      f.words.push_back({i, N - i});
    }
    f.roots.push_back(amb(N, {{an, n}}));
    f.weights.push_back(amb(N, {{an, n}}));
    f.words.push_back({n});
    return f;
  }
  if (k == Kind::B1 || k == Kind::A2odd || k == Kind::D1) {
    Fold h = fold(k == Kind::A2odd ? Kind::A2 : Kind::D2, n);
    // node 0 becomes 2 alpha_0 + alpha_1 of the host, Lambda_1 loses Lambda_0
    h.roots[0] = lin(2, h.roots[0], 1, h.roots[1]);
    h.words[0] = {0, 1, 2 * n - 1, 0};
    h.weights[1] = sub(h.weights[1], h.weights[0]);
    if (k == Kind::D1) {
      h.roots[n] = lin(2, h.roots[n], 1, h.roots[n - 1]);
      h.words[n] = {n, n - 1, n + 1, n};
      h.weights[n - 1] = sub(h.weights[n - 1], h.weights[n]);
    }
    return h;
  }
  // rank-2 exceptional types sit inside A_5^(2)
  Fold h = fold(Kind::A2odd, 3);
  const int three = k == Kind::G21 ? 3 : 1;
  f.N = 6;
  f.roots = {scale(three, h.roots[0]), scale(three, h.roots[2]), add(h.roots[1], h.roots[3])};
  f.weights = {scale(three, h.weights[0]), scale(three, h.weights[2]), add(h.weights[1], h.weights[3])};
  f.words = {{0, 1, 5, 0}, {2, 4}, {1, 3, 5}};
  return f;
}

QVec unit(int dim, int i, int c = 1) {
  QVec v(dim, Rational(0));
  v[i] = c;
  return v;
}

QMat epsilon_roots(Kind k, int n) {
  if (k == Kind::A1) {
    QMat R;
    for (int i = 0; i + 1 < n; ++i) R.push_back(sub(unit(n, i), unit(n, i + 1)));
    return R;
  }
  if (k == Kind::G21) return {{-2, 1, 1}, {1, -1, 0}};
  if (k == Kind::D43) return {{1, -1, 0}, {-2, 1, 1}};
  QMat R;
  for (int i = 0; i + 1 < n; ++i) R.push_back(sub(unit(n, i), unit(n, i + 1)));
  switch (k) {
    case Kind::B1:
    case Kind::A2p:
    case Kind::D2: R.push_back(unit(n, n - 1)); break;
    case Kind::C1:
    case Kind::A2odd:
    case Kind::A2: R.push_back(unit(n, n - 1, 2)); break;
    case Kind::D1: R.push_back(add(unit(n, n - 2), unit(n, n - 1))); break;
    default: break;
  }
  return R;
}

char finite_kind_of(Kind k) {
  switch (k) {
    case Kind::A1: return 'A';
    case Kind::B1:
    case Kind::A2p:
    case Kind::D2: return 'B';
    case Kind::C1:
    case Kind::A2odd:
    case Kind::A2: return 'C';
    case Kind::D1: return 'D';
    default: return 'G';
  }
}

// box weight of node i (residues k and N-k share a node)
Rational pi_node(Kind k, int i, int n) {
  const Rational half(1, 2);
  switch (k) {
    case Kind::A1:
    case Kind::C1: return 1;
    case Kind::B1:
    case Kind::G21: return i == 0 ? Rational(0) : i == n ? Rational(1) : half;
    case Kind::D1:
    case Kind::D43: return (i == 0 || i == n) ? Rational(0) : half;
    case Kind::D2: return (i == 0 || i == n) ? Rational(1) : half;
    case Kind::A2: return i == 0 ? Rational(1) : half;
    case Kind::A2p: return i == n ? Rational(2) : Rational(1);
    case Kind::A2odd: return i == 0 ? Rational(0) : half;
  }
  return 0;
}

CoreModel model_of(Kind k) {
  switch (k) {
    case Kind::A1: return CoreModel::Cores;
    case Kind::C1:
    case Kind::D2:
    case Kind::A2:
    case Kind::A2p: return CoreModel::SelfConjugate;
    case Kind::B1:
    case Kind::D1:
    case Kind::A2odd: return CoreModel::SelfConjugateEvenDiagonal;
    default: return CoreModel::G2Pattern;
  }
}

std::vector<int> integral_null(const QVec& v) {
  Rational mn = 0;
  for (const auto& x : v)
    if (x != 0 && (mn == 0 || abs(x) < mn)) mn = abs(x);
  std::vector<int> out;
  for (const auto& x : v) {
    const Rational y = x / mn;
    out.push_back(static_cast<int>(to_ll(y < 0 ? -y : y)));
  }
  return out;
}

std::string mstar_text(Kind k) {
  switch (k) {
    case Kind::B1: return "sum Z a_i (i<n) + 2Z a_n";
    case Kind::C1: return "sum 2Z a_i (i<n) + Z a_n";
    case Kind::A2: return "sum Z a_i (i<n) + 1/2 Z a_n";
    case Kind::G21: return "Z a_1 + 3Z a_2";
    case Kind::A2p: return "computed";
    default: return "sum Z a_i";
  }
}

CartanData build(const AffineType& t) {
  CartanData d;
  d.type = t;
  const Kind k = t.kind;
  const int n = fixed_rank(k) ? 3 : t.rank;  // host rank for the fold
  const Fold f = fold(k, n);
  d.modulus = f.N;
  d.fold_roots = f.roots;
  d.fold_weights = f.weights;
  d.generator_words = f.words;
  d.finite_rank = static_cast<int>(f.roots.size()) - 1;
  d.finite_kind = finite_kind_of(k);
  d.core_model = model_of(k);
  const int r = d.nodes();

  d.cartan.assign(r, QVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      d.cartan[i][j] = 2 * ambient_form(f.N, f.roots[i], f.roots[j]) / ambient_form(f.N, f.roots[i], f.roots[i]);
  d.marks = integral_null(linalg::null_vector(d.cartan));
  d.comarks = integral_null(linalg::null_vector(linalg::transpose(d.cartan)));
  for (int m : d.marks) d.eta += m;
  for (int m : d.comarks) d.eta_dual += m;
  d.eta_tilde = k == Kind::C1 ? 2 * d.eta_dual : d.eta_dual;
  d.lambda0_scale = f.weights[0][0];

  // folded weights must be dual to the folded roots
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Rational pairing = 2 * dot(f.roots[j], f.weights[i]) / ambient_form(f.N, f.roots[j], f.roots[j]);
      if (pairing != (i == j ? 1 : 0)) throw std::logic_error("fold weights are not dual to fold roots");
    }

  d.simple_roots = epsilon_roots(k, fixed_rank(k) ? 2 : t.rank);
  for (int i = 1; i < r; ++i)
    for (int j = 1; j < r; ++j) {
      const auto& ai = d.simple_roots[i - 1];
      const auto& aj = d.simple_roots[j - 1];
      if (2 * dot(ai, aj) / dot(ai, ai) != d.cartan[i][j])
        throw std::logic_error("finite Cartan block disagrees with the epsilon roots");
    }

  // positive roots: closure of the simple roots under simple reflections
  std::set<QVec> seen(d.simple_roots.begin(), d.simple_roots.end());
  std::vector<QVec> frontier(d.simple_roots.begin(), d.simple_roots.end());
  d.positive_roots = frontier;
  while (!frontier.empty()) {
    std::vector<QVec> next;
    for (const auto& v : frontier)
      for (const auto& a : d.simple_roots) {
        QVec w = reflect(v, a);
        if (seen.count(w)) continue;
        const QVec c = linalg::solve(linalg::transpose(d.simple_roots), w);
        if (std::any_of(c.begin(), c.end(), [](const Rational& x) { return x < 0; })) continue;
        seen.insert(w);
        next.push_back(w);
        d.positive_roots.push_back(w);
      }
    frontier = std::move(next);
  }
  std::sort(d.positive_roots.begin(), d.positive_roots.end());
  d.rho.assign(d.epsilon_dim(), Rational(0));
  for (const auto& a : d.positive_roots) d.rho = add(d.rho, scale(Rational(1, 2), a));

  d.theta.assign(d.epsilon_dim(), Rational(0));
  for (int i = 1; i < r; ++i) d.theta = add(d.theta, scale(d.marks[i], d.simple_roots[i - 1]));

  // ratio of the invariant form to the Euclidean one, the same on every node
  for (int i = 1; i < r; ++i) {
    const auto& a = d.simple_roots[i - 1];
    const Rational fi = Rational(2 * d.comarks[i]) / (Rational(d.comarks[0]) * d.marks[i] * dot(a, a));
    if (i == 1)
      d.norm_factor = fi;
    else if (fi != d.norm_factor)
      throw std::logic_error("norm factor differs between nodes");
  }
  d.root_norms.push_back(d.norm_factor * dot(d.theta, d.theta) / (Rational(d.marks[0]) * d.marks[0]));
  for (const auto& a : d.simple_roots) d.root_norms.push_back(d.norm_factor * dot(a, a));

  d.pi.resize(f.N);
  for (int res = 0; res < f.N; ++res) d.pi[res] = pi_node(k, std::min(res, f.N - res), f.N / 2);

  // M*: lattice spanned by the W-orbit of theta / a_0
  std::set<QVec> orbit{scale(Rational(1, d.marks[0]), d.theta)};
  std::vector<QVec> todo(orbit.begin(), orbit.end());
  while (!todo.empty()) {
    QVec v = todo.back();
    todo.pop_back();
    for (const auto& a : d.simple_roots) {
      QVec w = reflect(v, a);
      if (orbit.insert(w).second) todo.push_back(w);
    }
  }
  QMat coords;
  for (const auto& v : orbit) coords.push_back(linalg::solve(linalg::transpose(d.simple_roots), v));
  d.mstar_basis = linalg::lattice_basis(coords);
  d.mstar_description = mstar_text(k);
  return d;
}

}  // namespace

Rational CartanData::kappa(const Rational& norm2) const {
  switch (type.kind) {
    case Kind::D2: return norm2 == 2 ? Rational(1, 2) : Rational(1);
    case Kind::A2odd: return norm2 == 4 ? Rational(1, 2) : Rational(1);
    case Kind::D43: return norm2 == 6 ? Rational(1, 3) : Rational(1);
    case Kind::A2p: return norm2 == 1 ? Rational(2) : Rational(1);
    default: return 1;
  }
}

const CartanData& registry(const AffineType& t) {
  static std::mutex mu;
  static std::map<AffineType, CartanData> cache;
  const AffineType checked = make_type(t.kind, t.rank);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(checked);
  if (it == cache.end()) it = cache.emplace(checked, build(checked)).first;
  return it->second;
}

QVec simple_root_coords(const CartanData& d, const QVec& v) { return linalg::solve(linalg::transpose(d.simple_roots), v); }

bool is_positive_root(const CartanData& d, const QVec& v) {
  return std::binary_search(d.positive_roots.begin(), d.positive_roots.end(), v);
}

bool mstar_contains_computed(const AffineType& t, const QVec& coords) {
  return linalg::in_lattice(registry(t).mstar_basis, coords);
}

bool mstar_contains(const AffineType& t, const QVec& coords) {
  const CartanData& d = registry(t);
  if (static_cast<int>(coords.size()) != d.finite_rank) throw std::invalid_argument("coordinate vector has the wrong length");
  const int n = d.finite_rank;
  auto integral = [&](int from, int to, const Rational& step) {
    for (int i = from; i < to; ++i)
      if (!is_integral(coords[i] / step)) return false;
    return true;
  };
  switch (t.kind) {
    case Kind::B1: return integral(0, n - 1, 1) && integral(n - 1, n, 2);
    case Kind::C1: return integral(0, n - 1, 2) && integral(n - 1, n, 1);
    case Kind::A2: return integral(0, n - 1, 1) && integral(n - 1, n, Rational(1, 2));
    case Kind::G21: return integral(0, 1, 1) && integral(1, 2, 3);
    case Kind::A2p: return mstar_contains_computed(t, coords);
    default: return integral(0, n, 1);
  }
}

QVec fold_root(const AffineType& t, int i) { return registry(t).fold_roots.at(i); }
QVec fold_weight(const AffineType& t, int i) { return registry(t).fold_weights.at(i); }

}  // namespace affgrass
