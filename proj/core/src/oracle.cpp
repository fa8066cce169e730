#include "opaque/oracle.hpp"

#include <algorithm>

namespace opaque {

namespace {

struct RVec {
  Rational x;
  Rational y;
};

int half_plane(const RVec& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }
int cross_sign(const RVec& u, const RVec& v) { return sgn(Rational(u.x * v.y - u.y * v.x)); }
int dot_sign(const RVec& u, const RVec& v) { return sgn(Rational(u.x * v.x + u.y * v.y)); }

// Directions of lines through p that meet one connected component.
// A component seen edge-on along one ray reports that ray's direction in
// `collinear` instead: it never decides blockedness, but a witness must not
// use it.
DirectionIntervalSet component_arcs(const Point& p, const Barrier& barrier, const std::vector<std::size_t>& members,
                                    std::vector<Direction>& collinear) {
  std::vector<RVec> rays;
  for (std::size_t idx : members) {
    for (const Point* q : {&barrier.segments()[idx].a, &barrier.segments()[idx].b}) {
      rays.push_back({q->x - p.x, q->y - p.y});
    }
  }
  std::sort(rays.begin(), rays.end(), [](const RVec& u, const RVec& v) {
    const int hu = half_plane(u);
    const int hv = half_plane(v);
    return hu != hv ? hu < hv : cross_sign(u, v) > 0;
  });
  rays.erase(std::unique(rays.begin(), rays.end(),
                         [](const RVec& u, const RVec& v) {
                           return cross_sign(u, v) == 0 && dot_sign(u, v) > 0;
                         }),
             rays.end());
  // All endpoints on one ray from p: only the collinear direction.
  if (rays.size() == 1) {
    collinear.emplace_back(rays.front().x, rays.front().y);
    return {};
  }

  // An angular gap wider than pi means p sees the component inside a cone
  // narrower than pi; the component, being connected, meets exactly the
  // lines through that cone. Otherwise p is in the component's convex hull.
  for (std::size_t k = 0; k < rays.size(); ++k) {
    const RVec& u = rays[k];
    const RVec& v = rays[(k + 1) % rays.size()];
    if (cross_sign(u, v) < 0) {
      return DirectionIntervalSet::ccw_arc(Direction(v.x, v.y), Direction(u.x, u.y));
    }
  }
  return DirectionIntervalSet::full();
}

}  // namespace

BlockedVerdict is_blocked(const Point& p, const Barrier& barrier) {
  if (barrier.on_barrier(p)) return {true, std::nullopt, DirectionIntervalSet::full()};
  BlockedVerdict verdict;
  std::vector<Direction> collinear;
  for (const auto& comp : barrier.components()) {
    verdict.coverage_arcs.unite(component_arcs(p, barrier, comp.segment_indices, collinear));
    if (verdict.coverage_arcs.is_full()) break;
  }
  verdict.witness = verdict.coverage_arcs.uncovered_direction(collinear);
  verdict.blocked = !verdict.witness.has_value();
  return verdict;
}

std::vector<BlockedVerdict> brute_force_coverage_check(const Barrier& barrier,
                                                       const std::vector<Point>& candidates) {
  std::vector<BlockedVerdict> verdicts;
  verdicts.reserve(candidates.size());
  for (const auto& p : candidates) verdicts.push_back(is_blocked(p, barrier));
  return verdicts;
}

}  // namespace opaque
