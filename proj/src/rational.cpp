#include "relex/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace relex {

namespace {

using BigInt = boost::multiprecision::cpp_int;

bool parse_integer(const std::string& s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = BigInt(s);
  return true;
}

}  // namespace

std::string format_rational(const Rational& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  BigInt value;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt num, den;
    if (!parse_integer(text.substr(0, slash), num) ||
        !parse_integer(text.substr(slash + 1), den) || den == 0)
      throw std::invalid_argument("bad rational literal: " + text);
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_digits = text.size() - dot - 1;
    if (frac_digits == 0 || !parse_integer(digits, value))
      throw std::invalid_argument("bad rational literal: " + text);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
    return Rational(value, den);
  }
  if (!parse_integer(text, value))
    throw std::invalid_argument("bad rational literal: " + text);
  return Rational(value);
}

}  // namespace relex
