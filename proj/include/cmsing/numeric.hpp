#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace cmsing {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact quotient in the coefficient ring, or nullopt-like failure signalled
// through the return flag.
inline bool try_exact_div(const Integer& a, const Integer& b, Integer& out) {
  if (b == 0) throw DomainError("division by zero");
  Integer r;
  boost::multiprecision::divide_qr(a, b, out, r);
  return r == 0;
}

inline bool try_exact_div(const Rational& a, const Rational& b, Rational& out) {
  if (b == 0) throw DomainError("division by zero");
  out = a / b;
  return true;
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer ipow(const Integer& base, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

inline std::string to_string(const Integer& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }

}  // namespace cmsing
