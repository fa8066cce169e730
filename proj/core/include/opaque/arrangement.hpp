#pragma once

#include <cstddef>
#include <vector>

#include "opaque/geometry.hpp"
#include "opaque/wedge.hpp"

namespace opaque {

/// Closed axis-aligned rectangle.
struct Box {
  Rational xmin, ymin, xmax, ymax;

  bool strictly_contains(const Point& p) const {
    return xmin < p.x && p.x < xmax && ymin < p.y && p.y < ymax;
  }
  bool contains(const Point& p) const {
    return xmin <= p.x && p.x <= xmax && ymin <= p.y && p.y <= ymax;
  }
  Rational area() const { return (xmax - xmin) * (ymax - ymin); }
};

/// Smallest box containing `points` and every pairwise intersection of
/// `lines`, grown by a margin of 1 on every side.
Box clip_box_for(const std::vector<Line>& lines, const std::vector<Point>& points);

/// Sides of the clip box, used as the support of box half-edges.
enum BoxSide : int { kBottom = -1, kRight = -2, kTop = -3, kLeft = -4 };

struct HalfEdge {
  int origin = -1;
  int next = -1;
  int face = -1;  // -1: the unbounded face outside the box
  int support = 0;  // line index, or a BoxSide
};

/// A bounded open convex cell of the arrangement.
struct Face {
  std::vector<int> cycle;  // vertex ids, counter-clockwise, collinear ones kept
  int half_edge = -1;      // some half-edge with this face on its left
  Point representative;    // strictly interior
};

/// Planar subdivision of a box by a finite set of lines.
class Arrangement {
 public:
  const std::vector<Line>& lines() const { return lines_; }
  const Box& box() const { return box_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  /// Arrangement lines (not box sides) through vertex v, sorted.
  const std::vector<int>& vertex_lines(int v) const { return vertex_lines_[v]; }
  /// Outgoing half-edges of v in counter-clockwise order.
  const std::vector<int>& outgoing(int v) const { return outgoing_[v]; }
  /// Bounded faces around v (deduplicated).
  std::vector<int> incident_faces(int v) const;

  static int twin(int h) { return h ^ 1; }
  int target(int h) const { return half_edges_[twin(h)].origin; }
  std::size_t edge_count() const { return half_edges_.size() / 2; }

  /// Index of `l` in lines(), or -1.
  int line_index(const Line& l) const;

  Rational face_area(int f) const;

  friend Arrangement build_arrangement(std::vector<Line> lines, const Box& box,
                                      const std::vector<Segment>& avoid);

 private:
  std::vector<Line> lines_;
  Box box_;
  std::vector<Point> vertices_;
  std::vector<std::vector<int>> vertex_lines_;
  std::vector<std::vector<int>> outgoing_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Face> faces_;
};

/// Lines are deduplicated. Throws ContractViolation unless the box strictly
/// contains every pairwise intersection. Face representatives are kept off
/// the `avoid` segments.
Arrangement build_arrangement(std::vector<Line> lines, const Box& box,
                              const std::vector<Segment>& avoid = {});

/// depth(f) = number of systems whose point set contains face f, decided at
/// the face's representative point. Throws ContractViolation if a system
/// boundary line is missing from the arrangement.
std::vector<int> face_depths(const Arrangement& arr, const std::vector<VertexWedgeSystem>& systems);

/// The same depths computed by walking the dual graph from one face and
/// re-evaluating only the systems whose apex lies on each crossed line.
std::vector<int> face_depths_by_traversal(const Arrangement& arr,
                                          const std::vector<VertexWedgeSystem>& systems);

}  // namespace opaque
