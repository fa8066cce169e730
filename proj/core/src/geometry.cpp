#include "opaque/geometry.hpp"

#include <utility>

#include "opaque/error.hpp"

namespace opaque {

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Rational cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return static_cast<Orientation>(sgn(cross));
}

bool on_segment(const Point& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != Orientation::Collinear) return false;
  const auto within = [](const Rational& v, const Rational& lo, const Rational& hi) {
    return lo <= hi ? (lo <= v && v <= hi) : (hi <= v && v <= lo);
  };
  return within(p.x, s.a.x, s.b.x) && within(p.y, s.a.y, s.b.y);
}

bool segments_intersect(const Segment& s1, const Segment& s2) {
  const Orientation o1 = orientation(s1.a, s1.b, s2.a);
  const Orientation o2 = orientation(s1.a, s1.b, s2.b);
  const Orientation o3 = orientation(s2.a, s2.b, s1.a);
  const Orientation o4 = orientation(s2.a, s2.b, s1.b);
  if (o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
      o3 != Orientation::Collinear && o4 != Orientation::Collinear) {
    return true;
  }
  return on_segment(s2.a, s1) || on_segment(s2.b, s1) || on_segment(s1.a, s2) ||
         on_segment(s1.b, s2);
}

// ---------------------------------------------------------------------------
// Line

Line::Line(Integer a, Integer b, Integer c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ == 0 && b_ == 0) throw ContractViolation("line with a = b = 0");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
  }
  const int lead = a_ != 0 ? sgn(a_) : sgn(b_);
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
}

int Line::side(const Point& q) const {
  // Work over the common denominator to stay in integers.
  const Integer& dx = q.x.get_den();
  const Integer& dy = q.y.get_den();
  const Integer value = a_ * q.x.get_num() * dy + b_ * q.y.get_num() * dx + c_ * dx * dy;
  return sgn(value);
}

bool operator<(const Line& l, const Line& m) {
  if (int c = cmp(l.a_, m.a_); c != 0) return c < 0;
  if (int c = cmp(l.b_, m.b_); c != 0) return c < 0;
  return l.c_ < m.c_;
}

std::string to_string(const Line& l) {
  return "[" + l.a().get_str() + ", " + l.b().get_str() + ", " + l.c().get_str() + "]";
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw InputError("line through identical points " + to_string(p));
  const Rational a = q.y - p.y;
  const Rational b = p.x - q.x;
  const Rational c = -(a * p.x + b * p.y);
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  const Rational scale(l);
  return Line(Rational(a * scale).get_num(), Rational(b * scale).get_num(),
              Rational(c * scale).get_num());
}

LineMeet line_intersection(const Line& l1, const Line& l2) {
  const Integer det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det == 0) {
    if (l1 == l2) return Identical{};
    return Parallel{};
  }
  return Point(make_rational(l1.b() * l2.c() - l2.b() * l1.c(), det),
               make_rational(l1.c() * l2.a() - l2.c() * l1.a(), det));
}

// ---------------------------------------------------------------------------
// Direction

Direction::Direction(const Integer& dx, const Integer& dy) : dx_(dx), dy_(dy) { canonicalize(); }

Direction::Direction(const Rational& dx, const Rational& dy) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
  dx_ = dx.get_num() * (l / dx.get_den());
  dy_ = dy.get_num() * (l / dy.get_den());
  canonicalize();
}

Direction Direction::zero_angle() { return Direction(Integer(1), Integer(0)); }

void Direction::canonicalize() {
  if (dx_ == 0 && dy_ == 0) throw ContractViolation("direction of the zero vector");
  Integer g;
  mpz_gcd(g.get_mpz_t(), dx_.get_mpz_t(), dy_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(dx_.get_mpz_t(), dx_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(dy_.get_mpz_t(), dy_.get_mpz_t(), g.get_mpz_t());
  }
  if (dy_ < 0 || (dy_ == 0 && dx_ < 0)) {
    dx_ = -dx_;
    dy_ = -dy_;
  }
}

bool operator<(const Direction& u, const Direction& v) {
  // Both lie in the half-open upper half-plane, where a positive cross
  // product means a strictly larger angle.
  return sgn(Integer(u.dx_ * v.dy_ - u.dy_ * v.dx_)) > 0;
}

std::string to_string(const Direction& d) { return d.dx().get_str() + "," + d.dy().get_str(); }

Direction direction_between(const Point& p, const Point& q) {
  if (p == q) throw InputError("direction between identical points " + to_string(p));
  return Direction(Rational(q.x - p.x), Rational(q.y - p.y));
}

Direction direction_of(const Line& l) { return Direction(l.b(), Integer(-l.a())); }

bool line_meets_segment(const Point& p, const Direction& d, const Segment& s) {
  const auto side = [&](const Point& q) {
    return sgn(Rational(d.dx() * (q.y - p.y) - d.dy() * (q.x - p.x)));
  };
  const int sa = side(s.a);
  const int sb = side(s.b);
  return sa == 0 || sb == 0 || sa != sb;
}

}  // namespace opaque
