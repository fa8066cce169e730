#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque {

/// A regular n-gon with every edge shortened by `gap` (a fraction of the
/// edge length) at both ends, leaving n disjoint segments with small gaps
/// at the corners. Vertices come from the rational circle parameterization
/// t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)) with t rounded to
/// thousandths, so coordinates are exact and the polygon is only nearly
/// regular. A seed jitters each t by at most one thousandth.
///
/// Throws InputError unless n >= 3 and 0 < gap < 1/2.
std::vector<Segment> generate_ngon(int n, const Rational& gap, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace opaque
