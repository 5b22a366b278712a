#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace rcross {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p", "p/q" or a plain decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

// Renders num/den in lowest terms, "p" when the denominator is 1.
std::string format_rational(const Rational& value);

// Fixed-point decimal with `digits` places, rounded half away from zero.
// Exact: works on the rational itself, never through a double.
std::string decimal_fixed(const Rational& value, int digits);

// Floor of the square root of a nonnegative integer.
Int isqrt_floor(const Int& value);

int sign_of(const Rational& value);

}  // namespace rcross
