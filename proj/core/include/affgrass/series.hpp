#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "affgrass/exact.hpp"

namespace affgrass {

// Dense univariate polynomial over Q; coefficient k multiplies z^k.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  static Polynomial variable();  // z

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational eval(const Rational& z) const;
  bool is_zero() const { return coeffs_.empty(); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& k);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Sparse Laurent polynomial in a fixed number of variables over Q.
class LaurentPoly {
 public:
  using Exponent = std::vector<long>;
  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}
  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly monomial(const Exponent& e, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);
  // drop every term whose exponent in variable var exceeds bound
  LaurentPoly truncated(int var, long bound) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& k);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& k) { return a *= k; }
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  std::map<Exponent, Rational> terms_;
};

// multiplicative identity shaped like a given element
inline Rational ring_one(const Rational&) { return 1; }
inline Polynomial ring_one(const Polynomial&) { return Polynomial(1); }
inline LaurentPoly ring_one(const LaurentPoly& x) { return LaurentPoly::constant(x.nvars(), 1); }

// Power series in q modulo q^{order+1}, coefficients in C.
template <class C>
class TruncatedSeries {
 public:
  TruncatedSeries(int order, const C& zero) : order_(order), coeffs_(order + 1, zero), zero_(zero) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
  }
  int order() const { return order_; }
  const C& operator[](int k) const { return coeffs_.at(k); }
  C& operator[](int k) { return coeffs_.at(k); }
  const C& zero() const { return zero_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check(o);
    for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check(o);
    for (int k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    TruncatedSeries out(a.order_, a.zero_);
    for (int i = 0; i <= a.order_; ++i) {
      if (is_zero_coeff(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= a.order_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  TruncatedSeries pow(unsigned e) const {
    TruncatedSeries result = one_like(), base = *this;
    for (; e; e >>= 1) {
      if (e & 1) result = result * base;
      base = base * base;
    }
    return result;
  }
  TruncatedSeries scaled(const Rational& k) const {
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) c *= k;
    return out;
  }
  // exp of a series with zero constant term: n f_n = sum_k k g_k f_{n-k}
  TruncatedSeries exp() const {
    if (!is_zero_coeff(coeffs_[0])) throw std::domain_error("exp needs a zero constant term");
    TruncatedSeries f(order_, zero_);
    f.coeffs_[0] = ring_one(zero_);
    for (int n = 1; n <= order_; ++n) {
      C acc = zero_;
      for (int k = 1; k <= n; ++k) acc += coeffs_[k] * f.coeffs_[n - k] * Rational(k);
      f.coeffs_[n] = acc * Rational(1, n);
    }
    return f;
  }
  // log of a series with constant term 1: n g_n = n f_n - sum_{k<n} k g_k f_{n-k}
  TruncatedSeries log() const {
    if (coeffs_[0] != ring_one(zero_)) throw std::domain_error("log needs constant term 1");
    TruncatedSeries g(order_, zero_);
    for (int n = 1; n <= order_; ++n) {
      C acc = coeffs_[n] * Rational(n);
      for (int k = 1; k < n; ++k) acc -= g.coeffs_[k] * coeffs_[n - k] * Rational(k);
      g.coeffs_[n] = acc * Rational(1, n);
    }
    return g;
  }
  TruncatedSeries one_like() const {
    TruncatedSeries out(order_, zero_);
    out.coeffs_[0] = ring_one(zero_);
    return out;
  }
  bool operator==(const TruncatedSeries& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

 private:
  static bool is_zero_coeff(const Rational& x) { return x == 0; }
  template <class T>
  static bool is_zero_coeff(const T& x) { return x.is_zero(); }
  void check(const TruncatedSeries& o) const {
    if (order_ != o.order_) throw std::invalid_argument("series orders differ");
  }
  int order_;
  std::vector<C> coeffs_;
  C zero_;
};

// prod_{k>=1} (1 - q^k) truncated at the given order
TruncatedSeries<Rational> euler_product(int order);

}  // namespace affgrass
