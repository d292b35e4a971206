#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ckrep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact conversion; every finite double is a binary rational.
Rational rational_from_double(double x);

/// Parse "p/q", an integer, or a decimal with optional exponent ("0.35", "-1.2e-3").
/// Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

/// Parse a whitespace- or comma-separated list of rationals.
std::vector<Rational> parse_rational_vector(const std::string& text);

/// "p/q" when the denominator is not 1, else just "p".
std::string to_string(const Rational& q);

/// Best continued-fraction approximation p/q of x with q <= max_den.
/// Stops early once |x - p/q| <= stop_tol. The caller is expected to verify
/// the result exactly; this function never guarantees closeness by itself.
Rational rational_approx(double x, std::int64_t max_den, double stop_tol = 1e-13);

}  // namespace ckrep
