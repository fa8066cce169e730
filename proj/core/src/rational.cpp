#include "opaque/rational.hpp"

#include <stdexcept>

namespace opaque {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void reject(std::string_view text, const char* reason) {
  throw std::invalid_argument("bad rational \"" + std::string(text) + "\": " + reason);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den)) reject(text, "denominator must be a positive integer");
  }
  if (!all_digits(num)) reject(text, "numerator must be an integer");

  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) reject(text, "zero denominator");
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::size_t hash_value(const Integer& value) {
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(value.get_mpz_t()) + 1);
  const std::size_t limbs = mpz_size(value.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    hash_combine(seed, static_cast<std::size_t>(mpz_getlimbn(value.get_mpz_t(), i)));
  }
  return seed;
}

std::size_t hash_value(const Rational& value) {
  std::size_t seed = hash_value(value.get_num());
  hash_combine(seed, hash_value(value.get_den()));
  return seed;
}

}  // namespace opaque
