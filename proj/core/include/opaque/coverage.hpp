#pragma once

#include <cstddef>
#include <vector>

#include "opaque/arrangement.hpp"
#include "opaque/barrier.hpp"
#include "opaque/wedge.hpp"

namespace opaque {

/// A positive-area connected piece of the coverage: faces of full depth
/// glued along shared edges.
struct MaximalRegion {
  std::vector<Point> boundary;  // outer cycle, CCW, starts at its smallest vertex
  std::vector<int> faces;       // arrangement face ids, sorted
  Rational area;
};

struct CoverageStats {
  std::size_t segments = 0;       // n
  std::size_t components = 0;     // m
  std::size_t hull_vertices = 0;  // V, the number of vertex wedge systems
  std::size_t lines = 0;          // L
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t full_depth_faces = 0;
  std::size_t regions = 0;
  std::size_t isolated_points = 0;
  std::size_t candidate_points = 0;  // arrangement vertices on >= 3 lines
  /// Points where two distinct regions touch without sharing an edge.
  std::vector<Point> shared_vertices;

  // Wall-clock milliseconds per stage.
  double ms_wedges = 0;
  double ms_arrangement = 0;
  double ms_depths = 0;
  double ms_regions = 0;
  double ms_isolated = 0;
};

/// The full coverage: regions, the barrier itself, and isolated points.
struct CoverageResult {
  std::vector<MaximalRegion> regions;
  std::vector<Segment> barrier_segments;
  std::vector<Point> isolated_points;
  CoverageStats stats;
};

/// Everything the pipeline built on the way, kept for verification.
struct CoverageWork {
  std::vector<VertexWedgeSystem> systems;
  Arrangement arrangement;
  std::vector<int> depths;
  std::vector<int> region_of_face;  // -1 for faces not in any region
  CoverageResult result;
};

struct CoverageOptions {
  /// Added to every computed face depth. Nonzero only to check that the
  /// self-test harness catches a broken pipeline.
  int depth_bias = 0;
};

CoverageWork compute_coverage_work(const Barrier& barrier, const CoverageOptions& options = {});

CoverageResult compute_coverage(const Barrier& barrier, const CoverageOptions& options = {});

/// Connected components (across shared edges) of the faces with
/// depth == full_depth, with traced outer boundaries. Regions are sorted by
/// their smallest boundary vertex. Fills region_of_face.
std::vector<MaximalRegion> merge_full_depth_faces(const Arrangement& arr, const std::vector<int>& depths,
                                                  int full_depth, std::vector<int>* region_of_face = nullptr);

/// Arrangement vertices on at least three lines, outside every region's
/// closure and off the barrier, that the oracle confirms blocked. Sorted.
std::vector<Point> detect_isolated_points(const Arrangement& arr, const Barrier& barrier,
                                          const std::vector<int>& region_of_face,
                                          std::size_t* candidates = nullptr);

/// Four segments (2,0)-(2,2), (3,3)-(0,3), (0,4)-(-4,4), (-5,5)-(-5,0).
/// Seen from the origin their blocked directions tile the circle, so the
/// origin is blocked. It is not isolated though: every junction leaves a gap
/// on the same side, and the points just below y = x (0 < y < x) form a
/// region with a corner at the origin.
Barrier four_arc_fixture();

/// Four segments whose arcs tile the circle at the origin, with the junction
/// gaps opening on alternating sides. The origin is the only blocked point
/// off the barrier: no regions, one isolated point.
Barrier isolated_point_fixture();

}  // namespace opaque
