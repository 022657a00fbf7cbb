#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chipfire {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses an optionally signed decimal integer. Throws InvalidInput.
Integer parse_integer(std::string_view text);

bool fits_int64(const Integer& value);

/// Converts to int64, throwing GuardExceeded(`guard`) when out of range.
std::int64_t to_int64(const Integer& value, const char* guard);

/// Floor division and the matching non-negative remainder (divisor > 0).
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

/// Fractional part in [0, 1).
Rational fractional_part(const Rational& value);

/// floor(sqrt(value)) for value >= 0.
Integer isqrt_floor(const Rational& value);

// Overflow-checked 64-bit arithmetic. The Integer overloads are plain, so
// templated kernels can run on either representation.
struct Overflow {};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Integer checked_add(const Integer& a, const Integer& b) { return a + b; }
inline Integer checked_sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer checked_mul(const Integer& a, const Integer& b) { return a * b; }

}  // namespace chipfire
