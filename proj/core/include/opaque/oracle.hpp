#pragma once

#include <optional>
#include <vector>

#include "opaque/barrier.hpp"
#include "opaque/direction_set.hpp"

namespace opaque {

/// Result of a blocked-point query.
struct BlockedVerdict {
  bool blocked = false;
  /// A direction whose line through the query point misses every segment.
  /// Present exactly when the point is clear.
  std::optional<Direction> witness;
  /// Directions of lines through the query point that meet the barrier,
  /// ignoring isolated single directions (collinear segments), which can
  /// never decide blockedness.
  DirectionIntervalSet coverage_arcs;
};

/// Radial sweep around p. Uses only the barrier's segments and component
/// partition: in particular it does not touch the precomputed hulls.
BlockedVerdict is_blocked(const Point& p, const Barrier& barrier);

/// is_blocked over a batch, in input order.
std::vector<BlockedVerdict> brute_force_coverage_check(const Barrier& barrier,
                                                       const std::vector<Point>& candidates);

}  // namespace opaque
