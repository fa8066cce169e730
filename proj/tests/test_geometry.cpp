#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "opaque/error.hpp"
#include "opaque/geometry.hpp"
#include "support.hpp"

using namespace opaque;
using testing_support::P;
using testing_support::S;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(parse_rational("-7/14"), Rational(-1, 2));
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
  EXPECT_EQ(to_string(parse_rational("8/4")), "2");
  EXPECT_EQ(to_string(parse_rational("0/9")), "0");
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"1/0", "abc", "", "1.5", "1/-2", "/3", "3/", "--1"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << "accepted \"" << bad << "\"";
    } catch (const std::invalid_argument& e) {
      EXPECT_NE(std::string(e.what()).find(std::string("\"") + bad + "\""), std::string::npos) << e.what();
    }
  }
}

TEST(Orientation, Examples) {
  EXPECT_EQ(orientation(P(0, 0), P(1, 0), P(0, 1)), Orientation::CCW);
  EXPECT_EQ(orientation(P(0, 0), P(0, 1), P(1, 0)), Orientation::CW);
  EXPECT_EQ(orientation(P(0, 0), P(1, 1), P(3, 3)), Orientation::Collinear);
  EXPECT_EQ(orientation(P(0, 0), P("1/3", "1/3"), P("2/7", "2/7")), Orientation::Collinear);
  // Tiny turn that floating point would lose.
  EXPECT_EQ(orientation(P(0, 0), P("1000000000000", "1"), P("2000000000001", "2")), Orientation::CW);
}

TEST(Orientation, AntisymmetricAndCyclic) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Point p = testing_support::random_fine_point(rng, 5, 3);
    const Point q = testing_support::random_fine_point(rng, 5, 3);
    const Point r = testing_support::random_fine_point(rng, 5, 3);
    const int o = static_cast<int>(orientation(p, q, r));
    EXPECT_EQ(static_cast<int>(orientation(q, p, r)), -o);
    EXPECT_EQ(static_cast<int>(orientation(q, r, p)), o);
  }
}

TEST(Segments, OnSegment) {
  const Segment s = S(0, 0, 4, 2);
  EXPECT_TRUE(on_segment(P(0, 0), s));
  EXPECT_TRUE(on_segment(P(4, 2), s));
  EXPECT_TRUE(on_segment(P(2, 1), s));
  EXPECT_TRUE(on_segment(P("1", "1/2"), s));
  EXPECT_FALSE(on_segment(P(6, 3), s));
  EXPECT_FALSE(on_segment(P(2, 2), s));
}

TEST(Segments, Intersection) {
  EXPECT_TRUE(segments_intersect(S(0, 0, 2, 2), S(0, 2, 2, 0)));   // proper crossing
  EXPECT_TRUE(segments_intersect(S(0, 0, 2, 0), S(2, 0, 3, 5)));   // shared endpoint
  EXPECT_TRUE(segments_intersect(S(0, 0, 4, 0), S(2, 0, 2, 3)));   // T junction
  EXPECT_TRUE(segments_intersect(S(0, 0, 4, 0), S(3, 0, 6, 0)));   // collinear overlap
  EXPECT_FALSE(segments_intersect(S(0, 0, 1, 0), S(2, 0, 3, 0)));  // collinear, apart
  EXPECT_FALSE(segments_intersect(S(0, 0, 4, 0), S(0, 1, 4, 1)));  // parallel
  EXPECT_FALSE(segments_intersect(S(0, 0, 2, 2), S(3, 0, 2, 1)));  // would cross if extended
}

TEST(Line, Canonical) {
  EXPECT_EQ(line_through(P(0, 0), P(2, 2)), Line(1, -1, 0));
  EXPECT_EQ(Line(-2, 4, 6), Line(1, -2, -3));
  EXPECT_EQ(Line(0, -3, 9), Line(0, 1, -3));
  EXPECT_EQ(line_through(P("1/2", "0"), P("1/2", "7")), Line(2, 0, -1));
  EXPECT_THROW(Line(0, 0, 1), ContractViolation);
  EXPECT_THROW(line_through(P(1, 1), P(1, 1)), InputError);
}

TEST(Line, ThroughIsSymmetricAndContainsItsPoints) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Point p = testing_support::random_fine_point(rng, 6, 5);
    const Point q = testing_support::random_fine_point(rng, 6, 5);
    if (p == q) continue;
    const Line l = line_through(p, q);
    EXPECT_EQ(l, line_through(q, p));
    EXPECT_TRUE(l.contains(p));
    EXPECT_TRUE(l.contains(q));
    const Integer g = gcd(gcd(l.a(), l.b()), l.c());
    EXPECT_EQ(abs(g), 1);
  }
}

TEST(Line, Intersection) {
  const auto meet = line_intersection(Line(1, -1, 0), Line(1, 1, -2));
  ASSERT_TRUE(std::holds_alternative<Point>(meet));
  EXPECT_EQ(std::get<Point>(meet), P(1, 1));
  const auto frac = line_intersection(Line(3, 0, -1), Line(0, 7, -2));
  ASSERT_TRUE(std::holds_alternative<Point>(frac));
  EXPECT_EQ(std::get<Point>(frac), P("1/3", "2/7"));
  EXPECT_TRUE(std::holds_alternative<Parallel>(line_intersection(Line(1, 1, 0), Line(2, 2, 5))));
  EXPECT_TRUE(std::holds_alternative<Identical>(line_intersection(Line(1, 1, 1), Line(2, 2, 2))));
}

TEST(Direction, CanonicalForm) {
  EXPECT_EQ(Direction(Integer(-2), Integer(-4)), Direction(Integer(1), Integer(2)));
  EXPECT_EQ(Direction(Integer(-3), Integer(0)), Direction::zero_angle());
  EXPECT_EQ(Direction(Rational(1, 2), Rational(1, 3)), Direction(Integer(3), Integer(2)));
  EXPECT_THROW(Direction(Integer(0), Integer(0)), ContractViolation);
  EXPECT_EQ(direction_of(Line(1, -1, 5)), Direction(Integer(1), Integer(1)));
}

TEST(Direction, AngularOrder) {
  const Direction e(Integer(1), Integer(0)), ne(Integer(1), Integer(1)), n(Integer(0), Integer(1)),
      nw(Integer(-1), Integer(1));
  EXPECT_LT(e, ne);
  EXPECT_LT(ne, n);
  EXPECT_LT(n, nw);
  EXPECT_FALSE(nw < nw);
  EXPECT_LE(nw, nw);
}

TEST(Direction, BetweenIsSymmetric) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Point p = testing_support::random_fine_point(rng, 4, 7);
    const Point q = testing_support::random_fine_point(rng, 4, 7);
    if (p == q) continue;
    EXPECT_EQ(direction_between(p, q), direction_between(q, p));
    EXPECT_EQ(direction_between(p, q), direction_of(line_through(p, q)));
  }
  EXPECT_THROW(direction_between(P(2, 2), P(2, 2)), InputError);
}

TEST(Direction, SortIsDeterministic) {
  auto dirs = testing_support::sample_directions(90);
  std::mt19937_64 rng(9);
  auto shuffled = dirs;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::sort(shuffled.begin(), shuffled.end());
  EXPECT_EQ(shuffled, dirs);
}

TEST(Direction, LineMeetsSegment) {
  const Direction horizontal = Direction::zero_angle();
  EXPECT_TRUE(line_meets_segment(P(-5, 1), horizontal, S(0, 0, 0, 2)));
  EXPECT_TRUE(line_meets_segment(P(-5, 2), horizontal, S(0, 0, 0, 2)));  // grazes an endpoint
  EXPECT_FALSE(line_meets_segment(P(-5, 3), horizontal, S(0, 0, 0, 2)));
  EXPECT_TRUE(line_meets_segment(P(9, 0), horizontal, S(0, 0, 3, 0)));   // collinear
}
