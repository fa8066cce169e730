#include "opaque/ngon.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "opaque/error.hpp"

namespace opaque {

namespace {

constexpr long kParameterScale = 1000;

Point on_unit_circle(const Rational& t) {
  const Rational denom = 1 + t * t;
  return {Rational((1 - t * t) / denom), Rational(2 * t / denom)};
}

}  // namespace

std::vector<Segment> generate_ngon(int n, const Rational& gap, std::optional<std::uint64_t> seed) {
  if (n < 3) throw InputError("ngon needs n >= 3, got " + std::to_string(n));
  if (gap <= 0 || gap >= Rational(1, 2)) {
    throw InputError("ngon gap must lie strictly between 0 and 1/2, got " + to_string(gap));
  }

  // Angles -pi + pi/n + 2 pi k / n keep t = tan(angle / 2) finite.
  std::vector<long> numerators;
  std::mt19937_64 rng(seed.value_or(0));
  std::uniform_int_distribution<int> jitter(-1, 1);
  for (int k = 0; k < n; ++k) {
    const double angle = -std::numbers::pi + std::numbers::pi / n + 2 * std::numbers::pi * k / n;
    long t = std::lround(std::tan(angle / 2) * kParameterScale);
    if (seed) t += jitter(rng);
    if (!numerators.empty() && t <= numerators.back()) {
      throw InputError("ngon n = " + std::to_string(n) + " is too large for the parameter resolution");
    }
    numerators.push_back(t);
  }

  std::vector<Point> corners;
  for (long t : numerators) corners.push_back(on_unit_circle(make_rational(t, kParameterScale)));

  std::vector<Segment> segments;
  for (int k = 0; k < n; ++k) {
    const Point& p = corners[k];
    const Point& q = corners[(k + 1) % n];
    const Rational dx = q.x - p.x;
    const Rational dy = q.y - p.y;
    segments.push_back({{Rational(p.x + gap * dx), Rational(p.y + gap * dy)},
                        {Rational(q.x - gap * dx), Rational(q.y - gap * dy)}});
  }
  return segments;
}

}  // namespace opaque
