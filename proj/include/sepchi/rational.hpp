#pragma once

#include <boost/rational.hpp>

#include <stdexcept>
#include <string>

namespace sepchi {

// Exact rational arithmetic for average degrees, thresholds and the derived
// parameter chain. Strict inequalities are part of the verified claims, so
// none of these quantities ever pass through floating point.
using Rational = boost::rational<long long>;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

// Canonical serialized form is "p/q" in lowest terms ("5/2", "2/1", "-1/3").
std::string to_string(const Rational& r);

// Accepts "p/q" or a bare integer "p".
Rational parse_rational(const std::string& text);

long long floor_rational(const Rational& r);
long long ceil_rational(const Rational& r);

}  // namespace sepchi
