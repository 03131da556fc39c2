#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cwkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Renders as "p/q" with the denominator always written, e.g. "-2/1".
std::string fraction_string(const Rational& x);

// Decimal rendering with the given number of significant digits.
std::string decimal_string(const Rational& x, int significant_digits = 15);

// Accepts "p/q", plain integers, and decimal literals like "-0.25".
Rational parse_rational(const std::string& text);

// Largest integer <= x.
BigInt rational_floor(const Rational& x);

}  // namespace cwkit
