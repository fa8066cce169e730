#include <random>

#include <gtest/gtest.h>

#include "opaque/coverage.hpp"
#include "opaque/oracle.hpp"
#include "opaque/selftest.hpp"
#include "support.hpp"

using namespace opaque;
using testing_support::P;
using testing_support::S;

namespace {

Barrier unit_square() { return validate_and_build({S(0, 0, 1, 0), S(1, 0, 1, 1), S(1, 1, 0, 1), S(0, 1, 0, 0)}); }

}  // namespace

TEST(Oracle, UnitSquare) {
  const Barrier b = unit_square();
  EXPECT_TRUE(is_blocked(P("1/2", "1/2"), b).blocked);
  EXPECT_TRUE(is_blocked(P("1", "1/3"), b).blocked);
  const auto v = is_blocked(P(2, 2), b);
  ASSERT_FALSE(v.blocked);
  ASSERT_TRUE(v.witness);
  EXPECT_FALSE(testing_support::line_hits_any(P(2, 2), *v.witness, b.segments()));
}

TEST(Oracle, Batch) {
  const Barrier b = validate_and_build({S(0, 0, 4, 0), S(4, 0, 0, 4), S(0, 4, 0, 0)});
  const auto verdicts = brute_force_coverage_check(b, {P("4/3", "4/3"), P(50, 50), P(4, 0)});
  ASSERT_EQ(verdicts.size(), 3u);
  EXPECT_TRUE(verdicts[0].blocked);
  EXPECT_FALSE(verdicts[1].blocked);
  EXPECT_TRUE(verdicts[2].blocked);
  EXPECT_TRUE(brute_force_coverage_check(b, {}).empty());
}

TEST(Oracle, CollinearWithASegmentIsClear) {
  // Only the one collinear direction meets the segment.
  const Barrier b = validate_and_build({S(0, 0, 4, 0)});
  EXPECT_FALSE(is_blocked(P(9, 0), b).blocked);
  EXPECT_TRUE(is_blocked(P(3, 0), b).blocked);
}

TEST(Oracle, FourArcFixture) {
  const Barrier b = four_arc_fixture();
  const auto v = is_blocked(P(0, 0), b);
  EXPECT_TRUE(v.blocked);
  EXPECT_TRUE(v.coverage_arcs.is_full());
  for (const auto& s : b.segments()) {
    EXPECT_TRUE(is_blocked(Point((s.a.x + s.b.x) / 2, (s.a.y + s.b.y) / 2), b).blocked);
  }
}

TEST(Oracle, WitnessIsValid) {
  std::mt19937_64 rng(123);
  int clear = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Barrier b = validate_and_build(random_barrier(rng, 6, 8));
    for (int k = 0; k < 20; ++k) {
      const Point p = testing_support::random_fine_point(rng, 9, 3);
      const auto v = is_blocked(p, b);
      EXPECT_EQ(v.blocked, !v.witness.has_value());
      if (v.blocked) continue;
      ++clear;
      EXPECT_FALSE(testing_support::line_hits_any(p, *v.witness, b.segments()))
          << to_string(p) << " witness " << to_string(*v.witness);
    }
  }
  EXPECT_GT(clear, 500);
}

TEST(Oracle, SamplingNeverContradictsBlocked) {
  // If any sampled line misses the barrier, the point cannot be blocked.
  std::mt19937_64 rng(321);
  const auto dirs = testing_support::sample_directions(180);
  for (int trial = 0; trial < 100; ++trial) {
    const Barrier b = validate_and_build(random_barrier(rng, 6, 8));
    for (int k = 0; k < 10; ++k) {
      const Point p = testing_support::random_fine_point(rng, 9, 2);
      if (!is_blocked(p, b).blocked) continue;
      for (const auto& d : dirs) {
        EXPECT_TRUE(testing_support::line_hits_any(p, d, b.segments())) << to_string(p) << " " << to_string(d);
      }
    }
  }
}

TEST(Oracle, MonotoneUnderBarrierGrowth) {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 150; ++trial) {
    auto segments = random_barrier(rng, 4, 8);
    const Barrier small = validate_and_build(segments);
    const auto extra = random_barrier(rng, 3, 8);
    segments.insert(segments.end(), extra.begin(), extra.end());
    const Barrier big = validate_and_build(segments);
    for (int k = 0; k < 20; ++k) {
      const Point p = testing_support::random_fine_point(rng, 9, 2);
      if (is_blocked(p, small).blocked) {
        EXPECT_TRUE(is_blocked(p, big).blocked) << to_string(p);
      }
    }
  }
}
