#include "affgrass/exact.hpp"

#include <stdexcept>

namespace affgrass {

std::string to_string(const Int& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

Int to_integer(const Rational& q) {
  if (!is_integral(q)) throw std::domain_error("expected an integer, got " + to_string(q));
  return boost::multiprecision::numerator(q);
}

long long to_ll(const Rational& q) { return to_integer(q).convert_to<long long>(); }

Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVec add(const QVec& a, const QVec& b) {
  QVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

QVec scale(const Rational& k, const QVec& a) {
  QVec r(a);
  for (auto& x : r) x *= k;
  return r;
}

bool is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace affgrass
