#pragma once

// Exact integer and rational scalars shared by every module.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace conjd {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an exact rational literal: an integer ("-3"), a fraction ("-1/4")
/// or a finite decimal ("0.25"). Exponents, inf and nan are rejected with
/// std::invalid_argument so that boxes stay exact.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

/// Positive divisors of |value| in ascending order, by trial division.
/// Throws std::domain_error when |value| is zero or exceeds 2^62.
std::vector<std::int64_t> positive_divisors(const Integer& value);

/// Floor of the square root of a nonnegative 64-bit value, exact.
std::uint64_t isqrt(std::uint64_t v);

inline bool is_perfect_square(std::int64_t v) {
  if (v < 0) return false;
  const auto r = isqrt(static_cast<std::uint64_t>(v));
  return r * r == static_cast<std::uint64_t>(v);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace conjd
