#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opaque/coverage.hpp"

namespace opaque {

/// Input: {"segments": [[[x, y], [x, y]], ...]} where each coordinate is a
/// JSON integer or a "p/q" string.
struct InputDocument {
  std::vector<Segment> segments;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws InputError naming the segment index and the offending token.
InputDocument parse_input(std::string_view text);
std::string serialize_input(const InputDocument& doc);

struct OutputRegion {
  std::vector<Point> boundary;
  Rational area;

  friend bool operator==(const OutputRegion&, const OutputRegion&) = default;
};

struct OutputStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t hull_vertices = 0;
  std::size_t lines = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::size_t full_depth_faces = 0;
  std::size_t regions = 0;
  std::size_t isolated_points = 0;
  std::size_t candidate_points = 0;
  std::vector<Point> shared_vertices;
  /// Stage name to wall-clock milliseconds; empty unless requested, so that
  /// default output is byte-for-byte reproducible.
  std::vector<std::pair<std::string, double>> timings_ms;

  friend bool operator==(const OutputStats&, const OutputStats&) = default;
};

/// Every number is an exact rational string.
struct OutputDocument {
  std::vector<OutputRegion> regions;
  std::vector<Segment> segments;
  std::vector<Point> isolated_points;
  OutputStats stats;

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

OutputDocument make_output(const CoverageResult& result, bool with_timings);
std::string serialize_output(const OutputDocument& doc);
/// Throws InputError on malformed documents.
OutputDocument parse_output(std::string_view text);

}  // namespace opaque
