#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace affgrass {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// "p/q", or "p" when the denominator is 1
std::string to_string(const Rational& q);
std::string to_string(const Int& z);

bool is_integral(const Rational& q);
// throws std::domain_error when q is not an integer
Int to_integer(const Rational& q);
long long to_ll(const Rational& q);

Rational dot(const QVec& a, const QVec& b);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec scale(const Rational& k, const QVec& a);
bool is_zero(const QVec& a);

}  // namespace affgrass
