#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace hullvol {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational; always stored with positive denominator
/// and gcd(|num|, den) = 1 (maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a decimal string (optional exponent).
Rational rational_from_string(const std::string& s);

/// "p" when integral, otherwise "p/q".
std::string rational_to_string(const Rational& r);

/// Exact conversion (every finite double is a dyadic rational).
Rational rational_from_double(double x);

/// Rounds x to the nearest multiple of 2^-bits.
Rational snap_to_grid(double x, int bits = 40);

double to_double(const Rational& r);

}  // namespace hullvol
