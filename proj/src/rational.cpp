#include "cwkit/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <sstream>

namespace cwkit {

std::string fraction_string(const Rational& x) {
  std::ostringstream os;
  os << numerator(x) << "/" << denominator(x);
  return os.str();
}

std::string decimal_string(const Rational& x, int significant_digits) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  Float value = Float(numerator(x)) / Float(denominator(x));
  std::ostringstream os;
  os.precision(significant_digits);
  os << value;
  return os.str();
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(BigInt(s));
  bool negative = s[0] == '-';
  if (negative || s[0] == '+') s.erase(0, 1);
  dot = s.find('.');
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  if (digits.empty()) throw std::invalid_argument("bad rational literal '" + text + "'");
  BigInt num(digits);
  BigInt den = 1;
  for (size_t i = dot; i < s.size() - 1; ++i) den *= 10;
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

BigInt rational_floor(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

}  // namespace cwkit
