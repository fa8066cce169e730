#include "opaque/wedge.hpp"

#include <algorithm>

#include "opaque/error.hpp"

namespace opaque {

std::string_view to_string(WedgeCase c) {
  switch (c) {
    case WedgeCase::CollinearEmpty: return "collinear-empty";
    case WedgeCase::VertexDoubleWedge: return "vertex-double-wedge";
    case WedgeCase::InsideFullPlane: return "inside-full-plane";
    case WedgeCase::ExternalDoubleWedge: return "external-double-wedge";
  }
  return "?";
}

bool DoubleWedge::contains(const Point& q) const {
  const int s = line1.side(q) * line2.side(q);
  return s == 0 || s == inside_sign;
}

WedgeCase classify_wedge_case(const Point& p, const Component& comp) {
  const auto& hull = comp.hull;
  if (hull.degenerate()) {
    if (hull.vertices.size() == 1 ||
        orientation(hull.vertices[0], hull.vertices[1], p) == Orientation::Collinear) {
      return WedgeCase::CollinearEmpty;
    }
    return WedgeCase::ExternalDoubleWedge;
  }
  if (hull.vertex_index(p) >= 0) return WedgeCase::VertexDoubleWedge;
  if (hull.contains(p)) return WedgeCase::InsideFullPlane;
  return WedgeCase::ExternalDoubleWedge;
}

namespace {

// Wedge at p bounded by the rays towards `right` and `left`, where the cone
// from right to left turns counter-clockwise through less than pi.
WedgeRecord cone_wedge(WedgeCase kind, const Point& p, const Point& right, const Point& left) {
  const Point mid((right.x + left.x) / 2, (right.y + left.y) / 2);
  DoubleWedge w{p, line_through(p, right), line_through(p, left), 0};
  w.inside_sign = w.line1.side(mid) * w.line2.side(mid);
  auto arcs = DirectionIntervalSet::ccw_arc(direction_between(p, right), direction_between(p, left));
  return {kind, std::move(w), std::move(arcs)};
}

}  // namespace

WedgeRecord wedge_of(const Point& p, const Component& comp) {
  const WedgeCase kind = classify_wedge_case(p, comp);
  const auto& v = comp.hull.vertices;
  switch (kind) {
    case WedgeCase::CollinearEmpty:
      return {kind, std::nullopt, DirectionIntervalSet::empty()};
    case WedgeCase::InsideFullPlane:
      return {kind, std::nullopt, DirectionIntervalSet::full()};
    case WedgeCase::VertexDoubleWedge: {
      const std::size_t h = v.size();
      const auto i = static_cast<std::size_t>(comp.hull.vertex_index(p));
      // CCW hull: the interior cone at p turns from next to prev.
      return cone_wedge(kind, p, v[(i + 1) % h], v[(i + h - 1) % h]);
    }
    case WedgeCase::ExternalDoubleWedge: {
      auto [t1, t2] = tangents_from_external_point(p, comp.hull);
      if (orientation(p, t1, t2) == Orientation::CW) std::swap(t1, t2);
      return cone_wedge(kind, p, t1, t2);
    }
  }
  throw InvariantViolation("unreachable wedge case");
}

bool VertexWedgeSystem::contains(const Point& q) const {
  if (q == vertex) return !arcs.is_empty();
  return arcs.contains(direction_between(vertex, q));
}

VertexWedgeSystem vertex_wedge_system(const Point& p, const Barrier& barrier) {
  const auto& comps = barrier.components();
  const bool is_hull_vertex = std::any_of(comps.begin(), comps.end(), [&](const Component& c) {
    return c.hull.vertex_index(p) >= 0;
  });
  if (!is_hull_vertex) throw ContractViolation("vertex wedge system at non-hull-vertex " + to_string(p));

  VertexWedgeSystem system;
  system.vertex = p;
  for (const auto& comp : comps) {
    auto record = wedge_of(p, comp);
    system.arcs.unite(record.arcs);
    if (record.wedge) {
      system.boundary_lines.push_back(record.wedge->line1);
      system.boundary_lines.push_back(record.wedge->line2);
    }
    system.per_component.push_back(std::move(record));
  }
  auto& lines = system.boundary_lines;
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return system;
}

std::vector<VertexWedgeSystem> all_vertex_systems(const Barrier& barrier) {
  std::vector<VertexWedgeSystem> systems;
  for (const auto& comp : barrier.components()) {
    for (const auto& v : comp.hull.vertices) systems.push_back(vertex_wedge_system(v, barrier));
  }
  return systems;
}

}  // namespace opaque
