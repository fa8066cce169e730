#include "opaque/document.hpp"

#include <json.hpp>

#include "opaque/error.hpp"

namespace opaque {

using Json = nlohmann::ordered_json;

namespace {

Rational coordinate_from_json(const Json& value) {
  if (value.is_number_integer()) {
    return Rational(Integer(value.dump()));
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw std::invalid_argument("coordinate " + value.dump() + " is neither an integer nor a \"p/q\" string");
}

Point point_from_json(const Json& value) {
  if (!value.is_array() || value.size() != 2) {
    throw std::invalid_argument("point " + value.dump() + " is not an [x, y] pair");
  }
  return {coordinate_from_json(value[0]), coordinate_from_json(value[1])};
}

Json point_to_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json segment_to_json(const Segment& s) { return Json::array({point_to_json(s.a), point_to_json(s.b)}); }

Segment segment_from_json(const Json& value) {
  if (!value.is_array() || value.size() != 2) {
    throw std::invalid_argument("segment " + value.dump() + " is not a pair of points");
  }
  return {point_from_json(value[0]), point_from_json(value[1])};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::vector<Point> points_from_json(const Json& list, const char* what) {
  if (!list.is_array()) throw InputError(std::string(what) + " is not a list");
  std::vector<Point> points;
  for (std::size_t i = 0; i < list.size(); ++i) {
    try {
      points.push_back(point_from_json(list[i]));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string(what) + " " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return points;
}

Json points_to_json(const std::vector<Point>& points) {
  Json list = Json::array();
  for (const auto& p : points) list.push_back(point_to_json(p));
  return list;
}

std::vector<Segment> segments_from_json(const Json& list) {
  if (!list.is_array()) throw InputError("\"segments\" is not a list");
  std::vector<Segment> segments;
  for (std::size_t i = 0; i < list.size(); ++i) {
    try {
      segments.push_back(segment_from_json(list[i]));
    } catch (const std::invalid_argument& e) {
      throw InputError("segment " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  return segments;
}

Json segments_to_json(const std::vector<Segment>& segments) {
  Json list = Json::array();
  for (const auto& s : segments) list.push_back(segment_to_json(s));
  return list;
}

std::size_t count_field(const Json& stats, const char* key) {
  const Json& v = field(stats, key);
  if (!v.is_number_unsigned()) throw InputError(std::string("stats field \"") + key + "\" is not a count");
  return v.get<std::size_t>();
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  const Json doc = parse_json(text);
  return {segments_from_json(field(doc, "segments"))};
}

std::string serialize_input(const InputDocument& doc) {
  Json out;
  out["segments"] = segments_to_json(doc.segments);
  return out.dump(2) + "\n";
}

OutputDocument make_output(const CoverageResult& result, bool with_timings) {
  OutputDocument doc;
  for (const auto& r : result.regions) doc.regions.push_back({r.boundary, r.area});
  doc.segments = result.barrier_segments;
  doc.isolated_points = result.isolated_points;
  const auto& s = result.stats;
  doc.stats = {s.segments, s.components, s.hull_vertices, s.lines, s.vertices, s.edges, s.faces,
               s.full_depth_faces, s.regions, s.isolated_points, s.candidate_points, s.shared_vertices, {}};
  if (with_timings) {
    doc.stats.timings_ms = {{"wedges", s.ms_wedges},
                            {"arrangement", s.ms_arrangement},
                            {"depths", s.ms_depths},
                            {"regions", s.ms_regions},
                            {"isolated_points", s.ms_isolated}};
  }
  return doc;
}

std::string serialize_output(const OutputDocument& doc) {
  Json out;
  out["regions"] = Json::array();
  for (const auto& r : doc.regions) {
    out["regions"].push_back({{"boundary", points_to_json(r.boundary)}, {"area", to_string(r.area)}});
  }
  out["segments"] = segments_to_json(doc.segments);
  out["isolated_points"] = points_to_json(doc.isolated_points);
  const auto& s = doc.stats;
  Json stats = {{"n", s.n},
                {"m", s.m},
                {"hull_vertices", s.hull_vertices},
                {"lines", s.lines},
                {"vertices", s.vertices},
                {"edges", s.edges},
                {"faces", s.faces},
                {"full_depth_faces", s.full_depth_faces},
                {"regions", s.regions},
                {"isolated_points", s.isolated_points},
                {"candidate_points", s.candidate_points},
                {"shared_vertices", points_to_json(s.shared_vertices)}};
  if (!s.timings_ms.empty()) {
    Json timings = Json::object();
    for (const auto& [stage, ms] : s.timings_ms) timings[stage] = ms;
    stats["timings_ms"] = timings;
  }
  out["stats"] = stats;
  return out.dump(2) + "\n";
}

OutputDocument parse_output(std::string_view text) {
  const Json doc = parse_json(text);
  OutputDocument out;
  const Json& regions = field(doc, "regions");
  if (!regions.is_array()) throw InputError("\"regions\" is not a list");
  for (const auto& r : regions) {
    OutputRegion region;
    region.boundary = points_from_json(field(r, "boundary"), "boundary point");
    const Json& area = field(r, "area");
    try {
      region.area = coordinate_from_json(area);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("region area: ") + e.what());
    }
    out.regions.push_back(std::move(region));
  }
  out.segments = segments_from_json(field(doc, "segments"));
  out.isolated_points = points_from_json(field(doc, "isolated_points"), "isolated point");

  const Json& stats = field(doc, "stats");
  auto& s = out.stats;
  s.n = count_field(stats, "n");
  s.m = count_field(stats, "m");
  s.hull_vertices = count_field(stats, "hull_vertices");
  s.lines = count_field(stats, "lines");
  s.vertices = count_field(stats, "vertices");
  s.edges = count_field(stats, "edges");
  s.faces = count_field(stats, "faces");
  s.full_depth_faces = count_field(stats, "full_depth_faces");
  s.regions = count_field(stats, "regions");
  s.isolated_points = count_field(stats, "isolated_points");
  s.candidate_points = count_field(stats, "candidate_points");
  s.shared_vertices = points_from_json(field(stats, "shared_vertices"), "shared vertex");
  if (stats.contains("timings_ms")) {
    for (const auto& [stage, ms] : stats.at("timings_ms").items()) s.timings_ms.emplace_back(stage, ms.get<double>());
  }
  return out;
}

}  // namespace opaque
