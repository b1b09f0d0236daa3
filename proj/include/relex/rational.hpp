#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace relex {

// Exact rational arithmetic for weights, probabilities and metric values.
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

/// Accepts "p/q", plain integers, and decimal literals like "0.25".
/// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Exact value of the given double (doubles are dyadic rationals).
inline Rational rational_from_double(double x) { return Rational(x); }

}  // namespace relex
