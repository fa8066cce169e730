#include "opaque/direction_set.hpp"

#include <algorithm>

namespace opaque {

namespace {

// hi ordering with nullopt (pi) as the maximum.
bool hi_less(const std::optional<Direction>& a, const std::optional<Direction>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

// Strictly between u and v, for u < v both in [0, pi).
Direction between(const Direction& u, const Direction& v) {
  return Direction(Integer(u.dx() + v.dx()), Integer(u.dy() + v.dy()));
}

}  // namespace

DirectionIntervalSet DirectionIntervalSet::full() {
  DirectionIntervalSet s;
  s.arcs_.push_back({Direction::zero_angle(), std::nullopt});
  return s;
}

DirectionIntervalSet DirectionIntervalSet::ccw_arc(const Direction& start, const Direction& end) {
  DirectionIntervalSet s;
  if (start <= end) {
    s.arcs_.push_back({start, end});
  } else {
    s.arcs_.push_back({Direction::zero_angle(), end});
    s.arcs_.push_back({start, std::nullopt});
  }
  return s;
}

void DirectionIntervalSet::unite(const DirectionIntervalSet& other) {
  arcs_.insert(arcs_.end(), other.arcs_.begin(), other.arcs_.end());
  normalize();
}

void DirectionIntervalSet::normalize() {
  std::sort(arcs_.begin(), arcs_.end(),
            [](const DirectionArc& a, const DirectionArc& b) { return a.lo < b.lo; });
  std::vector<DirectionArc> merged;
  for (auto& arc : arcs_) {
    if (!merged.empty()) {
      auto& last = merged.back();
      // Closed arcs that touch at a single direction merge.
      if (!last.hi || arc.lo <= *last.hi) {
        if (hi_less(last.hi, arc.hi)) last.hi = arc.hi;
        continue;
      }
    }
    merged.push_back(std::move(arc));
  }
  arcs_ = std::move(merged);
}

bool DirectionIntervalSet::contains(const Direction& d) const {
  auto it = std::upper_bound(arcs_.begin(), arcs_.end(), d,
                             [](const Direction& x, const DirectionArc& a) { return x < a.lo; });
  if (it == arcs_.begin()) return false;
  return std::prev(it)->contains(d);
}

bool DirectionIntervalSet::is_full() const {
  return arcs_.size() == 1 && arcs_.front().lo == Direction::zero_angle() && !arcs_.front().hi;
}

std::optional<Direction> DirectionIntervalSet::uncovered_direction(const std::vector<Direction>& avoid) const {
  const auto avoided = [&](const Direction& d) { return std::find(avoid.begin(), avoid.end(), d) != avoid.end(); };
  // Bisect toward lo inside the open gap (lo, c]; avoid is finite, so this ends.
  const auto settle = [&](const std::optional<Direction>& lo, Direction c) {
    while (avoided(c)) c = lo ? between(*lo, c) : between(Direction::zero_angle(), c);
    return c;
  };
  const Direction zero = Direction::zero_angle();
  if (arcs_.empty()) {
    if (!avoided(zero)) return zero;
    return settle(zero, Direction(Integer(0), Integer(1)));
  }
  if (zero < arcs_.front().lo) {
    // Gap [0, first lo), which contains zero itself.
    if (!avoided(zero)) return zero;
    return settle(zero, between(zero, arcs_.front().lo));
  }
  // Normalized arcs never touch, so the first two leave a gap.
  if (arcs_.size() >= 2) return settle(arcs_[0].hi, between(*arcs_[0].hi, arcs_[1].lo));
  const auto& last = arcs_.back();
  if (!last.hi) return std::nullopt;
  // Gap (hi, pi).
  if (*last.hi == zero) return settle(zero, Direction(Integer(0), Integer(1)));
  return settle(last.hi, Direction(Integer(last.hi->dx() - last.hi->dy()), Integer(last.hi->dy())));
}

std::string to_string(const DirectionIntervalSet& set) {
  std::string out = "{";
  for (const auto& arc : set.arcs()) {
    if (out.size() > 1) out += " ";
    out += "[" + to_string(arc.lo) + " .. " + (arc.hi ? to_string(*arc.hi) : "pi") + "]";
  }
  return out + "}";
}

}  // namespace opaque
