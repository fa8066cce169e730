#include "opaque/barrier.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "opaque/error.hpp"

namespace opaque {

int ConvexHull::vertex_index(const Point& p) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == p) return static_cast<int>(i);
  }
  return -1;
}

bool ConvexHull::contains(const Point& p) const {
  if (vertices.size() == 1) return vertices.front() == p;
  if (vertices.size() == 2) return on_segment(p, {vertices[0], vertices[1]});
  const std::size_t h = vertices.size();
  for (std::size_t i = 0; i < h; ++i) {
    if (orientation(vertices[i], vertices[(i + 1) % h], p) == Orientation::CW) return false;
  }
  return true;
}

ConvexHull convex_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return {std::move(points)};

  // Andrew's monotone chain with strict turns, so collinear points drop out.
  std::vector<Point> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) != Orientation::CCW) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], *it) != Orientation::CCW) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return {std::move(hull)};
}

// ---------------------------------------------------------------------------

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::vector<std::size_t>> connected_components(const std::vector<Segment>& segments) {
  const std::size_t n = segments.size();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sets.find(i) != sets.find(j) && segments_intersect(segments[i], segments[j])) {
        sets.merge(i, j);
      }
    }
  }
  // Roots are the smallest member, so walking indices in order yields
  // groups ordered by first index.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = sets.find(i);
    if (root == i) {
      group_of[i] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(i);
  }
  return groups;
}

Barrier validate_and_build(const std::vector<Segment>& raw) {
  if (raw.empty()) throw InputError("barrier has no segments");
  Barrier barrier;
  std::set<Segment> seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Segment s = raw[i];
    if (s.a == s.b) throw InputError("segment " + std::to_string(i) + " has zero length", i);
    if (s.b < s.a) std::swap(s.a, s.b);
    if (seen.insert(s).second) barrier.segments_.push_back(std::move(s));
  }

  barrier.component_of_.resize(barrier.segments_.size());
  for (auto& group : connected_components(barrier.segments_)) {
    std::vector<Point> points;
    for (std::size_t idx : group) {
      barrier.component_of_[idx] = barrier.components_.size();
      points.push_back(barrier.segments_[idx].a);
      points.push_back(barrier.segments_[idx].b);
    }
    barrier.components_.push_back({std::move(group), convex_hull(std::move(points))});
  }
  return barrier;
}

std::vector<Point> Barrier::endpoints() const {
  std::vector<Point> points;
  for (const auto& s : segments_) {
    points.push_back(s.a);
    points.push_back(s.b);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

bool Barrier::on_barrier(const Point& p) const {
  return std::any_of(segments_.begin(), segments_.end(),
                     [&](const Segment& s) { return on_segment(p, s); });
}

// ---------------------------------------------------------------------------
// Tangents

namespace {

// Largest i in [lo, hi] with pred(i) true, given pred(lo) is true and pred is
// monotone true-then-false.
template <class Pred>
std::size_t last_true(std::size_t lo, std::size_t hi, Pred pred) {
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

std::pair<Point, Point> tangents_from_external_point(const Point& p, const ConvexHull& hull) {
  const auto& v = hull.vertices;
  if (v.empty()) throw ContractViolation("tangents to an empty hull");
  if (v.size() <= 2) {
    if (hull.contains(p)) throw ContractViolation("tangent query point " + to_string(p) + " lies on the hull");
    return {v.front(), v.back()};
  }

  // Edge i runs v[i] -> v[i+1]. Its sign is negative when p sees the edge
  // from outside. The negative edges form one cyclic run; its two ends are
  // the tangency vertices, and ending the run at a strictly negative edge
  // picks the nearer vertex when p is collinear with an adjacent edge.
  const std::size_t h = v.size();
  const auto edge_sign = [&](std::size_t i) {
    return static_cast<int>(orientation(v[i % h], v[(i + 1) % h], p));
  };
  // Position of x within the fan of rays v[0] -> v[i]; x must lie in the
  // closed cone at v[0]. Returns the index of the fan triangle's far edge.
  const auto fan_edge = [&](const Point& x) {
    const std::size_t i = last_true(1, h - 1, [&](std::size_t k) {
      return orientation(v[0], v[k], x) != Orientation::CW;
    });
    return std::min(i, h - 2);
  };

  std::size_t negative = 0;
  std::size_t non_negative = 0;
  const int first = edge_sign(0);
  const int last = edge_sign(h - 1);
  if (first >= 0 && last >= 0) {
    negative = fan_edge(p);
    non_negative = 0;
    if (edge_sign(negative) >= 0) throw ContractViolation("tangent query point inside hull");
  } else if (first < 0 && last < 0) {
    // v[0] is interior to the visible chain; the ray from p through v[0]
    // leaves the hull through an edge that faces away from p.
    const Point beyond(2 * v[0].x - p.x, 2 * v[0].y - p.y);
    negative = 0;
    non_negative = fan_edge(beyond);
  } else if (first < 0) {
    negative = 0;
    non_negative = h - 1;
  } else {
    negative = h - 1;
    non_negative = 0;
  }

  // Walking forward from a non-negative edge to a negative one, the sign
  // test flips exactly once, and likewise in the other direction.
  const std::size_t up_len = (negative + h - non_negative) % h;
  const std::size_t first_neg =
      (non_negative + 1 +
       last_true(0, up_len - 1, [&](std::size_t k) { return edge_sign(non_negative + k) >= 0; })) %
      h;
  const std::size_t down_len = (non_negative + h - negative) % h;
  const std::size_t last_neg =
      (negative + last_true(0, down_len - 1, [&](std::size_t k) { return edge_sign(negative + k) < 0; })) % h;
  return {v[first_neg], v[(last_neg + 1) % h]};
}

}  // namespace opaque
