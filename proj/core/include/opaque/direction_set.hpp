#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque {

/// A closed arc [lo, hi] of undirected directions with lo <= hi in angular
/// order. hi == nullopt stands for "up to pi", which is only produced by
/// splitting an arc that wraps past pi (or by the full circle); the pi end is
/// identified with angle zero, which the companion piece then contains.
struct DirectionArc {
  Direction lo;
  std::optional<Direction> hi;

  bool contains(const Direction& d) const { return lo <= d && (!hi || d <= *hi); }
  friend bool operator==(const DirectionArc&, const DirectionArc&) = default;
};

/// Finite union of closed arcs on the direction circle [0, pi), kept
/// normalized: sorted by lo, pairwise disjoint (touching arcs are merged).
class DirectionIntervalSet {
 public:
  DirectionIntervalSet() = default;

  static DirectionIntervalSet empty() { return {}; }
  static DirectionIntervalSet full();

  /// The arc swept counter-clockwise from `start` to `end`. Splits at pi when
  /// the sweep wraps. start == end gives the single direction.
  static DirectionIntervalSet ccw_arc(const Direction& start, const Direction& end);

  void unite(const DirectionIntervalSet& other);
  friend DirectionIntervalSet unite(DirectionIntervalSet a, const DirectionIntervalSet& b) {
    a.unite(b);
    return a;
  }

  bool contains(const Direction& d) const;
  bool is_empty() const { return arcs_.empty(); }
  bool is_full() const;

  /// A direction not covered by the set and not in `avoid`, or nullopt when
  /// the set is full. Away from zero the witness lies strictly inside a gap.
  std::optional<Direction> uncovered_direction(const std::vector<Direction>& avoid = {}) const;

  const std::vector<DirectionArc>& arcs() const { return arcs_; }

  friend bool operator==(const DirectionIntervalSet&, const DirectionIntervalSet&) = default;

 private:
  void normalize();

  std::vector<DirectionArc> arcs_;
};

std::string to_string(const DirectionIntervalSet& set);

}  // namespace opaque
