#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "opaque/barrier.hpp"
#include "opaque/geometry.hpp"
#include "opaque/rational.hpp"

namespace testing_support {

using opaque::Direction;
using opaque::Integer;
using opaque::Point;
using opaque::Rational;
using opaque::Segment;

inline Point P(long x, long y) { return {Rational(x), Rational(y)}; }
inline Point P(const std::string& x, const std::string& y) {
  return {opaque::parse_rational(x), opaque::parse_rational(y)};
}
inline Segment S(long ax, long ay, long bx, long by) { return {P(ax, ay), P(bx, by)}; }

// k directions spread over [0, pi), each offset half a step so none of them
// is axis-aligned or diagonal. Integer components, so everything stays exact.
inline std::vector<Direction> sample_directions(int k) {
  std::vector<Direction> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) {
    const double t = std::numbers::pi * (i + 0.5) / k;
    out.emplace_back(Integer(std::lround(100000 * std::cos(t))), Integer(std::lround(100000 * std::sin(t))));
  }
  return out;
}

inline bool line_hits_any(const Point& p, const Direction& d, const std::vector<Segment>& segments) {
  for (const auto& s : segments) {
    if (opaque::line_meets_segment(p, d, s)) return true;
  }
  return false;
}

inline Point random_point(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  const long x = c(rng);
  const long y = c(rng);
  return P(x, y);
}

// Random point with coordinates in steps of 1/den.
inline Point random_fine_point(std::mt19937_64& rng, long bound, long den) {
  std::uniform_int_distribution<long> c(-bound * den, bound * den);
  const long x = c(rng);
  const long y = c(rng);
  return {opaque::make_rational(Integer(x), Integer(den)), opaque::make_rational(Integer(y), Integer(den))};
}

}  // namespace testing_support
