#pragma once

// Exact planar primitives. Nothing in here ever touches floating point.

#include <cstddef>
#include <string>
#include <variant>

#include "opaque/rational.hpp"

namespace opaque {

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  /// Lexicographic: x first, then y.
  friend bool operator<(const Point& a, const Point& b) {
    const int c = cmp(a.x, b.x);
    return c < 0 || (c == 0 && a.y < b.y);
  }
};

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::size_t seed = hash_value(p.x);
    hash_combine(seed, hash_value(p.y));
    return seed;
  }
};

std::string to_string(const Point& p);

struct Segment {
  Point a;
  Point b;

  friend bool operator==(const Segment& s, const Segment& t) { return s.a == t.a && s.b == t.b; }
  friend bool operator<(const Segment& s, const Segment& t) {
    return s.a < t.a || (s.a == t.a && s.b < t.b);
  }
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

/// Sign of (q - p) x (r - p).
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// Closed point-on-segment test.
bool on_segment(const Point& p, const Segment& s);

/// True iff the closed segments share at least one point.
bool segments_intersect(const Segment& s1, const Segment& s2);

/// a*x + b*y + c = 0 with integer coefficients in lowest terms and the
/// leading nonzero coefficient positive, so equal lines compare equal.
class Line {
 public:
  /// Throws ContractViolation when a == b == 0.
  Line(Integer a, Integer b, Integer c);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }

  /// Sign of a*x + b*y + c at q.
  int side(const Point& q) const;
  bool contains(const Point& q) const { return side(q) == 0; }

  friend bool operator==(const Line& l, const Line& m) {
    return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_;
  }
  friend bool operator<(const Line& l, const Line& m);

 private:
  Integer a_;
  Integer b_;
  Integer c_;
};

std::string to_string(const Line& l);

/// Throws InputError when p == q.
Line line_through(const Point& p, const Point& q);

struct Parallel {};
struct Identical {};
using LineMeet = std::variant<Point, Parallel, Identical>;

LineMeet line_intersection(const Line& l1, const Line& l2);

/// An undirected line direction, i.e. a vector modulo nonzero scaling.
/// Canonical form: integer components in lowest terms with dy > 0, or
/// dy == 0 and dx > 0. Directions are totally ordered by their angle in
/// [0, pi), using cross-product signs only.
class Direction {
 public:
  /// Throws ContractViolation on the zero vector.
  Direction(const Rational& dx, const Rational& dy);
  Direction(const Integer& dx, const Integer& dy);

  /// The direction of angle zero, (1, 0).
  static Direction zero_angle();

  const Integer& dx() const { return dx_; }
  const Integer& dy() const { return dy_; }

  friend bool operator==(const Direction& u, const Direction& v) {
    return u.dx_ == v.dx_ && u.dy_ == v.dy_;
  }
  friend bool operator!=(const Direction& u, const Direction& v) { return !(u == v); }
  friend bool operator<(const Direction& u, const Direction& v);
  friend bool operator<=(const Direction& u, const Direction& v) { return !(v < u); }
  friend bool operator>(const Direction& u, const Direction& v) { return v < u; }

 private:
  void canonicalize();

  Integer dx_;
  Integer dy_;
};

std::string to_string(const Direction& d);

/// Throws InputError when p == q.
Direction direction_between(const Point& p, const Point& q);

/// The direction of a line.
Direction direction_of(const Line& l);

/// True iff the line through p with direction d meets the closed segment s.
bool line_meets_segment(const Point& p, const Direction& d, const Segment& s);

}  // namespace opaque
