#include "opaque/selftest.hpp"

#include <algorithm>
#include <set>

#include "opaque/oracle.hpp"

namespace opaque {

namespace {

Point random_point(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> coord(-bound, bound);
  const long x = coord(rng);
  const long y = coord(rng);
  return {Rational(x), Rational(y)};
}

bool in_closed_cycle(const Arrangement& arr, const Face& face, const Point& p) {
  const auto& c = face.cycle;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (orientation(arr.vertices()[c[i]], arr.vertices()[c[(i + 1) % c.size()]], p) == Orientation::CW) {
      return false;
    }
  }
  return true;
}

// Drops vertices that sit in the middle of a straight run.
std::vector<Point> strip_collinear(const std::vector<Point>& cycle) {
  std::vector<Point> out;
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (orientation(cycle[(i + k - 1) % k], cycle[i], cycle[(i + 1) % k]) != Orientation::Collinear) {
      out.push_back(cycle[i]);
    }
  }
  return out;
}

}  // namespace

std::vector<Segment> random_barrier(std::mt19937_64& rng, std::size_t max_segments, long bound) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return random_chain(rng, max_segments, bound);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_segments)(rng);
  std::vector<Segment> segments;
  while (segments.size() < n) {
    Segment s{random_point(rng, bound), random_point(rng, bound)};
    if (s.a != s.b) segments.push_back(std::move(s));
  }
  return segments;
}

std::vector<Segment> random_chain(std::mt19937_64& rng, std::size_t max_segments, long bound) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_segments)(rng);
  std::vector<Segment> segments;
  Point at = random_point(rng, bound);
  while (segments.size() < n) {
    Point next = random_point(rng, bound);
    if (next == at) continue;
    segments.push_back({at, next});
    at = std::move(next);
  }
  return segments;
}

std::vector<std::string> verify_coverage(const Barrier& barrier, const CoverageWork& work,
                                         const VerifyOptions& options) {
  std::vector<std::string> issues;
  const Arrangement& arr = work.arrangement;
  const auto& faces = arr.faces();
  const auto& result = work.result;
  const int full_depth = static_cast<int>(work.systems.size());

  // Arrangement structure.
  Rational area_sum;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    area_sum += arr.face_area(f);
    const auto& c = faces[f].cycle;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (orientation(arr.vertices()[c[i]], arr.vertices()[c[(i + 1) % c.size()]],
                      arr.vertices()[c[(i + 2) % c.size()]]) == Orientation::CW) {
        issues.push_back("face " + std::to_string(f) + " is not convex");
        break;
      }
    }
  }
  if (area_sum != arr.box().area()) issues.push_back("face areas do not sum to the clip box area");
  const long euler = static_cast<long>(arr.vertices().size()) - static_cast<long>(arr.edge_count()) +
                     static_cast<long>(faces.size()) + 1;
  if (euler != 2) issues.push_back("Euler characteristic is " + std::to_string(euler));
  if (face_depths_by_traversal(arr, work.systems) != work.depths) {
    issues.push_back("dual-traversal depths disagree with representative-point depths");
  }

  // Regions: positive area, edges on lines through two barrier endpoints,
  // inside the hull of the barrier.
  const auto endpoints = barrier.endpoints();
  const ConvexHull whole = convex_hull(endpoints);
  for (std::size_t r = 0; r < result.regions.size(); ++r) {
    const auto& region = result.regions[r];
    const std::string name = "region " + std::to_string(r);
    if (region.area <= 0) issues.push_back(name + " has non-positive area");
    const auto& b = region.boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const Point& p = b[i];
      const Point& q = b[(i + 1) % b.size()];
      const auto on_line = std::count_if(endpoints.begin(), endpoints.end(), [&](const Point& e) {
        return orientation(p, q, e) == Orientation::Collinear;
      });
      if (on_line < 2) {
        issues.push_back(name + " edge " + to_string(p) + "-" + to_string(q) +
                         " is not on a line through two barrier endpoints");
      }
      if (!whole.contains(p)) issues.push_back(name + " vertex " + to_string(p) + " lies outside the barrier hull");
    }
  }

  const std::set<Point> isolated(result.isolated_points.begin(), result.isolated_points.end());
  const auto in_region_closure = [&](const Point& p) {
    for (const auto& region : result.regions) {
      for (int f : region.faces) {
        if (in_closed_cycle(arr, faces[f], p)) return true;
      }
    }
    return false;
  };
  for (const auto& p : result.isolated_points) {
    const std::string name = "isolated point " + to_string(p);
    if (barrier.on_barrier(p)) issues.push_back(name + " lies on the barrier");
    if (in_region_closure(p)) issues.push_back(name + " lies in a region");
    if (!whole.contains(p)) issues.push_back(name + " lies outside the barrier hull");
    const auto lines_through = std::count_if(arr.lines().begin(), arr.lines().end(),
                                             [&](const Line& l) { return l.contains(p); });
    if (lines_through < 3) issues.push_back(name + " lies on fewer than three lines");
    if (!is_blocked(p, barrier).blocked) issues.push_back(name + " is clear according to the oracle");
  }

  // A connected barrier covers exactly its convex hull.
  if (barrier.components().size() == 1) {
    const ConvexHull& hull = barrier.components().front().hull;
    if (hull.degenerate()) {
      if (!result.regions.empty()) issues.push_back("collinear connected barrier has regions");
    } else if (result.regions.size() != 1) {
      issues.push_back("connected barrier yields " + std::to_string(result.regions.size()) + " regions");
    } else {
      Rational hull_area;
      const auto& v = hull.vertices;
      for (std::size_t i = 0; i < v.size(); ++i) {
        hull_area += v[i].x * v[(i + 1) % v.size()].y - v[(i + 1) % v.size()].x * v[i].y;
      }
      hull_area /= 2;
      if (result.regions.front().area != hull_area) issues.push_back("connected barrier region area differs from hull");
      if (strip_collinear(result.regions.front().boundary) != v) {
        issues.push_back("connected barrier region boundary differs from hull");
      }
    }
  }

  // Oracle agreement at every face representative.
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const bool expected = work.depths[f] == full_depth;
    if (is_blocked(faces[f].representative, barrier).blocked != expected) {
      issues.push_back("face " + std::to_string(f) + " at " + to_string(faces[f].representative) + " has depth " +
                       std::to_string(work.depths[f]) + "/" + std::to_string(full_depth) +
                       " but the oracle says " + (expected ? "clear" : "blocked"));
    }
  }

  // ... at every arrangement vertex, including those on only two lines.
  for (int v = 0; v < static_cast<int>(arr.vertices().size()); ++v) {
    const Point& p = arr.vertices()[v];
    const auto around = arr.incident_faces(v);
    const bool expected = barrier.on_barrier(p) || isolated.count(p) > 0 ||
                          std::any_of(around.begin(), around.end(),
                                      [&](int f) { return work.region_of_face[f] >= 0; });
    if (is_blocked(p, barrier).blocked != expected) {
      issues.push_back("vertex " + to_string(p) + " is " + (expected ? "clear" : "blocked") +
                       " according to the oracle but " + (expected ? "covered" : "uncovered") + " by the pipeline");
    }
  }

  // ... and at random points with quarter-integer coordinates.
  std::mt19937_64 rng(options.sample_seed);
  Rational xmin = endpoints.front().x, xmax = xmin, ymin = endpoints.front().y, ymax = ymin;
  for (const auto& e : endpoints) {
    xmin = std::min(xmin, e.x);
    xmax = std::max(xmax, e.x);
    ymin = std::min(ymin, e.y);
    ymax = std::max(ymax, e.y);
  }
  const auto floor_of = [](const Rational& v) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
  };
  // Quarter steps over the barrier's bounding box grown by one unit.
  const auto sample = [&](const Rational& lo, const Rational& hi) {
    const Integer a = floor_of(4 * lo - 4);
    const Integer b = floor_of(4 * hi + 4);
    const long span = Integer(b - a).get_si();
    const long k = std::uniform_int_distribution<long>(0, span)(rng);
    return make_rational(a + k, 4);
  };
  for (std::size_t i = 0; i < options.random_samples; ++i) {
    const Point p(sample(xmin, xmax), sample(ymin, ymax));
    const bool expected = barrier.on_barrier(p) || isolated.count(p) > 0 || in_region_closure(p);
    if (is_blocked(p, barrier).blocked != expected) {
      issues.push_back("sample " + to_string(p) + " is " + (expected ? "clear" : "blocked") +
                       " according to the oracle but " + (expected ? "covered" : "uncovered") + " by the pipeline");
    }
  }
  return issues;
}

SelftestReport run_selftest(const SelftestConfig& config) {
  SelftestReport report;
  for (std::size_t i = 0; i < config.count; ++i) {
    const std::uint64_t seed = config.seed + i;
    std::mt19937_64 rng(seed);
    const Barrier barrier = validate_and_build(random_barrier(rng, config.max_segments, config.bound));
    const CoverageWork work = compute_coverage_work(barrier, {config.depth_bias});
    const auto issues = verify_coverage(barrier, work, {config.samples, seed});
    ++report.instances;
    if (issues.empty()) continue;
    ++report.failed;
    report.violations += issues.size();
    report.text += "instance " + std::to_string(i) + " (seed " + std::to_string(seed) + "): " +
                   std::to_string(issues.size()) + " violation(s)\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(issues.size(), 5); ++k) report.text += "  " + issues[k] + "\n";
  }
  report.text += "selftest: " + std::to_string(report.instances) + " instance(s), " + std::to_string(report.failed) +
                 " failed, " + std::to_string(report.violations) + " violation(s)\n";
  return report;
}

}  // namespace opaque
