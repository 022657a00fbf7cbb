#include "chipfire/integer.hpp"

#include <limits>

#include "chipfire/errors.hpp"

namespace chipfire {

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw InvalidInput("not an integer: '" + std::string(text) + "'");
  Integer result = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') throw InvalidInput("not an integer: '" + std::string(text) + "'");
    result = result * 10 + (c - '0');
  }
  return negative ? Integer(-result) : result;
}

bool fits_int64(const Integer& value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Integer& value, const char* guard) {
  if (!fits_int64(value)) throw GuardExceeded(guard, "value " + value.str() + " exceeds 64-bit range");
  return value.convert_to<std::int64_t>();
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

Rational fractional_part(const Rational& value) {
  Integer fl = floor_div(numerator(value), denominator(value));
  return value - Rational(fl);
}

Integer isqrt_floor(const Rational& value) {
  Integer whole = floor_div(numerator(value), denominator(value));
  if (whole <= 0) return 0;
  Integer root = boost::multiprecision::sqrt(whole);
  // sqrt(floor(x)) floors to the same integer as sqrt(x).
  return root;
}

}  // namespace chipfire
