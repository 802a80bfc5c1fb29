#include "deskfair/rational.hpp"

#include <cmath>
#include <cstdint>

#include "deskfair/error.hpp"

namespace deskfair {

namespace mp = boost::multiprecision;

std::string to_fraction_string(const Rational& value) {
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
  }
  BigInt value(std::string(text.substr(start)));
  return text.front() == '-' ? BigInt(-value) : value;
}

BigInt pow10(int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_decimal_string(const Rational& value, int significant_digits) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  const BigInt num = mp::numerator(magnitude);
  const BigInt den = mp::denominator(magnitude);

  // exponent e with 10^e <= magnitude < 10^(e+1)
  int exponent = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  auto at_least_pow = [&](int e) {
    return e >= 0 ? num >= den * pow10(e) : num * pow10(-e) >= den;
  };
  while (!at_least_pow(exponent)) --exponent;
  while (at_least_pow(exponent + 1)) ++exponent;

  // digits = round_half_even(magnitude * 10^(sig - 1 - e))
  const int shift = significant_digits - 1 - exponent;
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  if (shift >= 0) {
    scaled_num *= pow10(shift);
  } else {
    scaled_den *= pow10(-shift);
  }
  BigInt quotient = scaled_num / scaled_den;
  const BigInt remainder2 = (scaled_num % scaled_den) * 2;
  if (remainder2 > scaled_den || (remainder2 == scaled_den && (quotient & 1) != 0)) {
    quotient += 1;
  }
  int point = exponent + 1;  // digits before the decimal point
  std::string digits = quotient.str();
  if (static_cast<int>(digits.size()) > significant_digits) {
    // rounding carried into a new leading digit (e.g. 9.99.. -> 10.0)
    digits.pop_back();
    ++point;
  }

  std::string out;
  if (point <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-point), '0') + digits;
  } else if (point >= static_cast<int>(digits.size())) {
    out = digits + std::string(static_cast<std::size_t>(point) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(point)) + "." +
          digits.substr(static_cast<std::size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::BadParameter, "cannot convert non-finite double to rational");
  }
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an exact integer
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result{BigInt(scaled)};
  if (exponent >= 0) {
    result *= Rational(BigInt(1) << exponent);
  } else {
    result /= Rational(BigInt(1) << -exponent);
  }
  return result;
}

}  // namespace deskfair
