#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace opaque {

/// Exact arbitrary-precision rational. GMP keeps it canonical
/// (positive denominator, gcd(|num|, den) = 1) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// num / den in canonical form. den must be nonzero.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (q > 0). Throws std::invalid_argument with the
/// offending token in the message.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }
inline int sign(const Integer& value) { return sgn(value); }

std::size_t hash_value(const Integer& value);
std::size_t hash_value(const Rational& value);

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace opaque
