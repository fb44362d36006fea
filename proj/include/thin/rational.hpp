#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace thin {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" (or "p" when q == 1).
inline std::string to_string(const Rational &q) {
  if (denominator(q) == 1)
    return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string &text);

/// 1 + 1/k
inline Rational one_plus_inverse(long long k) { return Rational(1) + Rational(1, k); }

} // namespace thin
