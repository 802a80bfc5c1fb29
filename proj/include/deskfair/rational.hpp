#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace deskfair {

// Arbitrary-precision rational, always normalized (gcd(num, den) = 1, den > 0).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "num/den", denominator always present ("0/1", "1/1").
std::string to_fraction_string(const Rational& value);

// Inverse of to_fraction_string; also accepts a bare integer. Throws ParseError.
Rational parse_fraction(std::string_view text);

// Positional decimal rounded half-to-even to `significant_digits` significant
// digits, trailing fractional zeros dropped. Informational only.
std::string to_decimal_string(const Rational& value, int significant_digits = 12);

double to_double(const Rational& value);

// Exact conversion of a finite double (every finite double is a dyadic rational).
Rational from_double(double value);

}  // namespace deskfair
