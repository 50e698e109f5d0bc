#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace dgtor {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using Index = std::size_t;

/// (-1)^k as an integer, valid for negative k.
inline int sign_power(long long k) { return (k % 2 == 0) ? 1 : -1; }

/// Mathematical (non-negative) remainder.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += (m < 0 ? -m : m);
  return r;
}

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

}  // namespace dgtor
