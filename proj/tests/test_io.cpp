#include <random>

#include <gtest/gtest.h>

#include "opaque/coverage.hpp"
#include "opaque/document.hpp"
#include "opaque/error.hpp"
#include "opaque/ngon.hpp"
#include "opaque/selftest.hpp"
#include "opaque/svg.hpp"
#include "support.hpp"

using namespace opaque;
using testing_support::P;
using testing_support::S;

TEST(Input, IntegersAndRationalStrings) {
  const auto doc = parse_input(R"({"segments": [[[0, 0], ["1/2", "-3"]], [["4", 1], [2, "6/4"]]]})");
  ASSERT_EQ(doc.segments.size(), 2u);
  EXPECT_EQ(doc.segments[0].b, P("1/2", "-3"));
  EXPECT_EQ(doc.segments[1].b, P("2", "3/2"));
}

TEST(Input, BigIntegers) {
  const auto doc = parse_input(R"({"segments": [[[123456789012345678, 0], [0, -5]]]})");
  EXPECT_EQ(doc.segments[0].a.x, Rational(Integer("123456789012345678")));
}

TEST(Input, Errors) {
  const auto error_of = [](const char* text) -> std::string {
    try {
      parse_input(text);
    } catch (const InputError& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_NE(error_of("{").find("malformed JSON"), std::string::npos);
  EXPECT_NE(error_of("{}").find("segments"), std::string::npos);
  EXPECT_NE(error_of(R"({"segments": 3})").find("not a list"), std::string::npos);
  const std::string bad = error_of(R"({"segments": [[[0,0],[1,1]], [[0,0],["1/0",1]]]})");
  EXPECT_NE(bad.find("segment 1"), std::string::npos) << bad;
  EXPECT_NE(bad.find("\"1/0\""), std::string::npos) << bad;
  EXPECT_NE(error_of(R"({"segments": [[[0,0]]]})").find("segment 0"), std::string::npos);
  EXPECT_NE(error_of(R"({"segments": [[[0,0],[1.5,1]]]})").find("1.5"), std::string::npos);
  try {
    parse_input(R"({"segments": [[[0,0],[1,1]], [[0,0],["x",1]]]})");
  } catch (const InputError& e) {
    ASSERT_TRUE(e.index());
    EXPECT_EQ(*e.index(), 1u);
  }
}

TEST(Input, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    InputDocument doc;
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int i = 0; i < n; ++i) {
      doc.segments.push_back(
          {testing_support::random_fine_point(rng, 50, 7), testing_support::random_fine_point(rng, 50, 7)});
    }
    const std::string text = serialize_input(doc);
    EXPECT_EQ(parse_input(text), doc);
    EXPECT_EQ(serialize_input(parse_input(text)), text);
  }
}

TEST(Output, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 15; ++trial) {
    const Barrier b = validate_and_build(random_barrier(rng, 5, 8));
    const auto result = compute_coverage(b);
    for (bool timings : {false, true}) {
      const OutputDocument doc = make_output(result, timings);
      EXPECT_EQ(parse_output(serialize_output(doc)), doc);
      EXPECT_EQ(serialize_output(doc).find("timings_ms") != std::string::npos, timings);
    }
  }
}

TEST(Output, TriangleDocument) {
  const auto result = compute_coverage(validate_and_build({S(0, 0, 4, 0), S(4, 0, 0, 4), S(0, 4, 0, 0)}));
  const std::string text = serialize_output(make_output(result, false));
  EXPECT_NE(text.find(R"("area": "8")"), std::string::npos) << text;
  EXPECT_NE(text.find(R"("isolated_points": [])"), std::string::npos) << text;
  EXPECT_THROW(parse_output(R"({"regions": []})"), InputError);
}

TEST(Ngon, Structure) {
  const auto segs = generate_ngon(4, Rational(1, 100));
  ASSERT_EQ(segs.size(), 4u);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) EXPECT_FALSE(segments_intersect(segs[i], segs[j]));
  }
  const Barrier b = validate_and_build(segs);
  EXPECT_EQ(b.components().size(), 4u);
  // Corners lie near the unit circle.
  for (const auto& s : segs) {
    const Rational r2 = s.a.x * s.a.x + s.a.y * s.a.y;
    EXPECT_GT(r2, Rational(9, 10));
    EXPECT_LT(r2, Rational(11, 10));
  }
}

TEST(Ngon, Validation) {
  EXPECT_THROW(generate_ngon(4, Rational(0)), InputError);
  EXPECT_THROW(generate_ngon(4, Rational(1, 2)), InputError);
  EXPECT_THROW(generate_ngon(4, Rational(-1, 10)), InputError);
  EXPECT_THROW(generate_ngon(2, Rational(1, 10)), InputError);
}

TEST(Ngon, SeedIsDeterministic) {
  EXPECT_EQ(generate_ngon(7, Rational(1, 20), 3), generate_ngon(7, Rational(1, 20), 3));
  EXPECT_NE(generate_ngon(7, Rational(1, 20), 3), generate_ngon(7, Rational(1, 20), 4));
  EXPECT_EQ(generate_ngon(7, Rational(1, 20)), generate_ngon(7, Rational(1, 20)));
}

TEST(Ngon, CoverageMatchesOracle) {
  const Barrier b = validate_and_build(generate_ngon(5, Rational(1, 100)));
  const CoverageWork w = compute_coverage_work(b);
  EXPECT_FALSE(w.result.regions.empty());
  const auto issues = verify_coverage(b, w);
  EXPECT_TRUE(issues.empty()) << issues.front();
}

TEST(Selftest, Deterministic) {
  SelftestConfig c;
  c.count = 8;
  c.seed = 42;
  const auto a = run_selftest(c);
  const auto b = run_selftest(c);
  EXPECT_EQ(a.text, b.text);
  EXPECT_TRUE(a.ok()) << a.text;
  EXPECT_EQ(a.instances, 8u);
}

TEST(Selftest, ZeroCountPasses) {
  SelftestConfig c;
  const auto r = run_selftest(c);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.text, "selftest: 0 instance(s), 0 failed, 0 violation(s)\n");
}

TEST(Selftest, CatchesBrokenDepths) {
  SelftestConfig c;
  c.count = 5;
  c.seed = 1;
  c.depth_bias = 1;
  const auto r = run_selftest(c);
  EXPECT_FALSE(r.ok());
  EXPECT_GT(r.violations, 0u);
}

TEST(Svg, DrawsEverything) {
  const auto svg = render_svg(compute_coverage(isolated_point_fixture()));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  EXPECT_NE(svg.find("<line"), std::string::npos);
  const auto tri = render_svg(compute_coverage(validate_and_build({S(0, 0, 4, 0), S(4, 0, 0, 4), S(0, 4, 0, 0)})));
  EXPECT_NE(tri.find("<polygon"), std::string::npos);
}
