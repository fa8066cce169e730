#include "opaque/coverage.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "opaque/error.hpp"
#include "opaque/oracle.hpp"

namespace opaque {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::vector<MaximalRegion> merge_full_depth_faces(const Arrangement& arr, const std::vector<int>& depths,
                                                  int full_depth, std::vector<int>* region_of_face) {
  const auto& faces = arr.faces();
  const auto& hes = arr.half_edges();
  const int n_faces = static_cast<int>(faces.size());
  const auto is_full = [&](int f) { return f >= 0 && depths[f] == full_depth; };

  std::vector<int> parent(n_faces);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t h = 0; h < hes.size(); ++h) {
    const int f = hes[h].face;
    const int g = hes[Arrangement::twin(static_cast<int>(h))].face;
    if (is_full(f) && is_full(g)) {
      const int a = find_root(parent, f);
      const int b = find_root(parent, g);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::vector<int> group(n_faces, -1);
  std::vector<std::vector<int>> members;
  for (int f = 0; f < n_faces; ++f) {
    if (!is_full(f)) continue;
    const int root = find_root(parent, f);
    if (group[root] < 0) {
      group[root] = static_cast<int>(members.size());
      members.emplace_back();
    }
    group[f] = group[root];
    members[group[f]].push_back(f);
  }

  std::vector<MaximalRegion> regions;
  std::vector<char> visited(hes.size(), 0);
  for (std::size_t r = 0; r < members.size(); ++r) {
    const auto in_region = [&](int f) { return f >= 0 && group[f] == static_cast<int>(r); };
    MaximalRegion region;
    region.faces = members[r];
    for (int f : region.faces) region.area += arr.face_area(f);

    // Trace every boundary cycle of the union; keep the outer (CCW) one.
    Rational best_area;
    for (int f : region.faces) {
      int start = faces[f].half_edge;
      int h = start;
      do {
        if (!visited[h] && !in_region(hes[Arrangement::twin(h)].face)) {
          std::vector<int> cycle;
          int e = h;
          while (!visited[e]) {
            visited[e] = 1;
            cycle.push_back(hes[e].origin);
            int g = hes[e].next;
            while (in_region(hes[Arrangement::twin(g)].face)) g = hes[Arrangement::twin(g)].next;
            e = g;
          }
          Rational twice;
          for (std::size_t k = 0; k < cycle.size(); ++k) {
            const Point& p = arr.vertices()[cycle[k]];
            const Point& q = arr.vertices()[cycle[(k + 1) % cycle.size()]];
            twice += p.x * q.y - q.x * p.y;
          }
          if (twice > best_area) {
            best_area = twice;
            region.boundary.clear();
            for (int v : cycle) region.boundary.push_back(arr.vertices()[v]);
          }
        }
        h = hes[h].next;
      } while (h != start);
    }
    auto smallest = std::min_element(region.boundary.begin(), region.boundary.end());
    std::rotate(region.boundary.begin(), smallest, region.boundary.end());
    regions.push_back(std::move(region));
  }

  std::vector<std::size_t> order(regions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return regions[a].boundary.front() < regions[b].boundary.front();
  });
  std::vector<MaximalRegion> sorted;
  std::vector<int> rank(regions.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    rank[order[k]] = static_cast<int>(k);
    sorted.push_back(std::move(regions[order[k]]));
  }
  if (region_of_face != nullptr) {
    region_of_face->assign(n_faces, -1);
    for (int f = 0; f < n_faces; ++f) {
      if (group[f] >= 0) (*region_of_face)[f] = rank[group[f]];
    }
  }
  return sorted;
}

std::vector<Point> detect_isolated_points(const Arrangement& arr, const Barrier& barrier,
                                          const std::vector<int>& region_of_face, std::size_t* candidates) {
  std::vector<Point> points;
  std::size_t examined = 0;
  for (int v = 0; v < static_cast<int>(arr.vertices().size()); ++v) {
    if (arr.vertex_lines(v).size() < 3) continue;
    const auto faces = arr.incident_faces(v);
    if (std::any_of(faces.begin(), faces.end(), [&](int f) { return region_of_face[f] >= 0; })) continue;
    const Point& p = arr.vertices()[v];
    if (barrier.on_barrier(p)) continue;
    ++examined;
    if (is_blocked(p, barrier).blocked) points.push_back(p);
  }
  std::sort(points.begin(), points.end());
  if (candidates != nullptr) *candidates = examined;
  return points;
}

CoverageWork compute_coverage_work(const Barrier& barrier, const CoverageOptions& options) {
  CoverageWork work;
  auto& stats = work.result.stats;

  auto t = Clock::now();
  work.systems = all_vertex_systems(barrier);
  std::vector<Line> lines;
  for (const auto& s : work.systems) lines.insert(lines.end(), s.boundary_lines.begin(), s.boundary_lines.end());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  stats.ms_wedges = elapsed_ms(t);

  t = Clock::now();
  const Box box = clip_box_for(lines, barrier.endpoints());
  work.arrangement = build_arrangement(std::move(lines), box, barrier.segments());
  stats.ms_arrangement = elapsed_ms(t);
  const Arrangement& arr = work.arrangement;

  t = Clock::now();
  work.depths = face_depths(arr, work.systems);
  for (int& d : work.depths) d += options.depth_bias;
  stats.ms_depths = elapsed_ms(t);

  t = Clock::now();
  const int full_depth = static_cast<int>(work.systems.size());
  work.result.regions = merge_full_depth_faces(arr, work.depths, full_depth, &work.region_of_face);
  for (int v = 0; v < static_cast<int>(arr.vertices().size()); ++v) {
    std::vector<int> touching;
    for (int f : arr.incident_faces(v)) {
      const int r = work.region_of_face[f];
      if (r >= 0 && std::find(touching.begin(), touching.end(), r) == touching.end()) touching.push_back(r);
    }
    if (touching.size() >= 2) stats.shared_vertices.push_back(arr.vertices()[v]);
  }
  std::sort(stats.shared_vertices.begin(), stats.shared_vertices.end());
  stats.ms_regions = elapsed_ms(t);

  t = Clock::now();
  work.result.isolated_points =
      detect_isolated_points(arr, barrier, work.region_of_face, &stats.candidate_points);
  stats.ms_isolated = elapsed_ms(t);

  work.result.barrier_segments = barrier.segments();
  stats.segments = barrier.segments().size();
  stats.components = barrier.components().size();
  stats.hull_vertices = work.systems.size();
  stats.lines = arr.lines().size();
  stats.vertices = arr.vertices().size();
  stats.edges = arr.edge_count();
  stats.faces = arr.faces().size();
  stats.full_depth_faces = static_cast<std::size_t>(
      std::count(work.depths.begin(), work.depths.end(), full_depth));
  stats.regions = work.result.regions.size();
  stats.isolated_points = work.result.isolated_points.size();
  return work;
}

CoverageResult compute_coverage(const Barrier& barrier, const CoverageOptions& options) {
  return std::move(compute_coverage_work(barrier, options).result);
}

Barrier four_arc_fixture() {
  const auto pt = [](int x, int y) { return Point(Rational(x), Rational(y)); };
  return validate_and_build({
      {pt(2, 0), pt(2, 2)},
      {pt(3, 3), pt(0, 3)},
      {pt(0, 4), pt(-4, 4)},
      {pt(-5, 5), pt(-5, 0)},
  });
}

Barrier isolated_point_fixture() {
  const auto pt = [](int x, int y) { return Point(Rational(x), Rational(y)); };
  return validate_and_build({
      {pt(3, 0), pt(6, 6)},
      {pt(-6, -6), pt(0, -2)},
      {pt(0, -8), pt(4, -4)},
      {pt(3, -3), pt(6, 0)},
  });
}

}  // namespace opaque
