#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "opaque/barrier.hpp"
#include "opaque/direction_set.hpp"

namespace opaque {

/// How a point p relates to one component B_i, which decides the shape of
/// the wedge of lines through p that the component blocks.
enum class WedgeCase {
  CollinearEmpty,      // degenerate (collinear) component and p on its line
  VertexDoubleWedge,   // p is a vertex of the component's hull
  InsideFullPlane,     // p inside the hull or on its boundary
  ExternalDoubleWedge, // p strictly outside the hull
};

std::string_view to_string(WedgeCase c);

/// Closed double wedge: the pair of vertical angles between two lines
/// through `apex` that contains the component.
struct DoubleWedge {
  Point apex;
  Line line1;
  Line line2;
  /// Sign of line1.side * line2.side at points strictly inside the wedge.
  int inside_sign = 0;

  bool contains(const Point& q) const;
};

struct WedgeRecord {
  WedgeCase kind;
  std::optional<DoubleWedge> wedge;
  DirectionIntervalSet arcs;
};

WedgeCase classify_wedge_case(const Point& p, const Component& comp);

WedgeRecord wedge_of(const Point& p, const Component& comp);

/// Union of the per-component wedges at one hull vertex p.
struct VertexWedgeSystem {
  Point vertex;
  std::vector<WedgeRecord> per_component;
  DirectionIntervalSet arcs;
  /// Every wedge boundary line at p, deduplicated and sorted, whether or not
  /// it survives as an arc endpoint after merging.
  std::vector<Line> boundary_lines;

  /// Whether q lies in the point set of the union (the apex belongs to it
  /// whenever the union is nonempty).
  bool contains(const Point& q) const;
};

VertexWedgeSystem vertex_wedge_system(const Point& p, const Barrier& barrier);

/// One system per hull vertex of every component, in component order.
std::vector<VertexWedgeSystem> all_vertex_systems(const Barrier& barrier);

}  // namespace opaque
