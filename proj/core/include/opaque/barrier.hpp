#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "opaque/geometry.hpp"

namespace opaque {

/// Convex hull of a component's segment endpoints. Vertices are CCW with no
/// three consecutive collinear. A hull with fewer than three vertices is
/// degenerate: every endpoint of the component lies on one line.
struct ConvexHull {
  std::vector<Point> vertices;

  bool degenerate() const { return vertices.size() < 3; }
  /// Index of p among the vertices, or -1.
  int vertex_index(const Point& p) const;
  /// Closed containment (interior or boundary).
  bool contains(const Point& p) const;
};

ConvexHull convex_hull(std::vector<Point> points);

struct Component {
  std::vector<std::size_t> segment_indices;
  ConvexHull hull;
};

/// A validated barrier. Segments are canonically oriented (a < b) and
/// deduplicated; components are ordered by their smallest segment index.
class Barrier {
 public:
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<Component>& components() const { return components_; }
  /// Component index of each segment.
  const std::vector<std::size_t>& component_of() const { return component_of_; }

  /// Every distinct segment endpoint, sorted.
  std::vector<Point> endpoints() const;
  bool on_barrier(const Point& p) const;

  friend Barrier validate_and_build(const std::vector<Segment>& raw);

 private:
  std::vector<Segment> segments_;
  std::vector<Component> components_;
  std::vector<std::size_t> component_of_;
};

/// Throws InputError on empty input or a zero-length segment (naming its index).
Barrier validate_and_build(const std::vector<Segment>& raw);

/// Partition of segment indices by the transitive closure of
/// segments_intersect. Groups are sorted, and ordered by first index.
std::vector<std::vector<std::size_t>> connected_components(const std::vector<Segment>& segments);

/// The two tangency vertices of `hull` seen from an external point, found by
/// binary search in O(log h). When a tangent line contains a whole hull edge
/// the vertex nearer to p is returned. Throws ContractViolation when p lies
/// inside or on the hull.
std::pair<Point, Point> tangents_from_external_point(const Point& p, const ConvexHull& hull);

}  // namespace opaque
