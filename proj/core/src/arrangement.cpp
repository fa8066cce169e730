#include "opaque/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "opaque/error.hpp"

namespace opaque {

Box clip_box_for(const std::vector<Line>& lines, const std::vector<Point>& points) {
  if (points.empty()) throw ContractViolation("clip box needs at least one point");
  Box box{points[0].x, points[0].y, points[0].x, points[0].y};
  const auto grow = [&](const Point& p) {
    if (p.x < box.xmin) box.xmin = p.x;
    if (p.x > box.xmax) box.xmax = p.x;
    if (p.y < box.ymin) box.ymin = p.y;
    if (p.y > box.ymax) box.ymax = p.y;
  };
  for (const auto& p : points) grow(p);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const LineMeet meet = line_intersection(lines[i], lines[j]);
      if (const auto* p = std::get_if<Point>(&meet)) grow(*p);
    }
  }
  box.xmin -= 1;
  box.ymin -= 1;
  box.xmax += 1;
  box.ymax += 1;
  return box;
}

namespace {

// Exact integer vector, used for the direction of a half-edge.
struct Vec {
  Integer x;
  Integer y;

  Vec operator-() const { return {-x, -y}; }
};

int half_plane(const Vec& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

// Counter-clockwise angular order over the full circle, starting at +x.
bool angle_less(const Vec& u, const Vec& v) {
  const int hu = half_plane(u);
  const int hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return sgn(Integer(u.x * v.y - u.y * v.x)) > 0;
}

// Direction of increasing sort key along a line: x for non-vertical lines,
// y for vertical ones.
Vec forward_direction(const Line& l) {
  if (l.b() == 0) return {0, 1};
  if (l.b() > 0) return {l.b(), -l.a()};
  return {-l.b(), l.a()};
}

}  // namespace

std::vector<int> Arrangement::incident_faces(int v) const {
  std::vector<int> faces;
  for (int h : outgoing_[v]) {
    const int f = half_edges_[h].face;
    if (f >= 0 && std::find(faces.begin(), faces.end(), f) == faces.end()) faces.push_back(f);
  }
  return faces;
}

int Arrangement::line_index(const Line& l) const {
  auto it = std::lower_bound(lines_.begin(), lines_.end(), l);
  if (it == lines_.end() || !(*it == l)) return -1;
  return static_cast<int>(it - lines_.begin());
}

Rational Arrangement::face_area(int f) const {
  const auto& cycle = faces_[f].cycle;
  Rational twice;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Point& p = vertices_[cycle[i]];
    const Point& q = vertices_[cycle[(i + 1) % cycle.size()]];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2;
}

Arrangement build_arrangement(std::vector<Line> lines, const Box& box, const std::vector<Segment>& avoid) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

  Arrangement arr;
  arr.lines_ = std::move(lines);
  arr.box_ = box;
  const auto& ls = arr.lines_;
  const std::size_t n_lines = ls.size();

  std::unordered_map<Point, int, PointHash> index;
  const auto intern = [&](Point p) {
    auto [it, inserted] = index.try_emplace(p, static_cast<int>(arr.vertices_.size()));
    if (inserted) arr.vertices_.push_back(std::move(p));
    return it->second;
  };

  // Vertices on every line and on every box side.
  std::vector<std::vector<int>> on_line(n_lines);
  std::vector<std::vector<int>> on_side(4);
  for (std::size_t i = 0; i < n_lines; ++i) {
    for (std::size_t j = i + 1; j < n_lines; ++j) {
      const LineMeet meet = line_intersection(ls[i], ls[j]);
      const auto* p = std::get_if<Point>(&meet);
      if (p == nullptr) continue;
      if (!box.strictly_contains(*p)) {
        throw ContractViolation("intersection " + to_string(*p) + " outside the clip box");
      }
      const int v = intern(*p);
      on_line[i].push_back(v);
      on_line[j].push_back(v);
    }
  }
  const int corners[4] = {intern({box.xmin, box.ymin}), intern({box.xmax, box.ymin}),
                          intern({box.xmax, box.ymax}), intern({box.xmin, box.ymax})};
  on_side[0] = {corners[0], corners[1]};
  on_side[1] = {corners[1], corners[2]};
  on_side[2] = {corners[3], corners[2]};
  on_side[3] = {corners[0], corners[3]};
  for (std::size_t i = 0; i < n_lines; ++i) {
    const Line& l = ls[i];
    const auto add = [&](int side, Point p) {
      const int v = intern(std::move(p));
      on_line[i].push_back(v);
      on_side[side].push_back(v);
    };
    if (l.a() != 0) {  // meets the horizontal sides
      for (int side : {0, 2}) {
        const Rational& y = side == 0 ? box.ymin : box.ymax;
        Rational x = -(l.b() * y + l.c()) / Rational(l.a());
        if (box.xmin <= x && x <= box.xmax) add(side, {std::move(x), y});
      }
    }
    if (l.b() != 0) {  // meets the vertical sides
      for (int side : {1, 3}) {
        const Rational& x = side == 1 ? box.xmax : box.xmin;
        Rational y = -(l.a() * x + l.c()) / Rational(l.b());
        if (box.ymin <= y && y <= box.ymax) add(side, {x, std::move(y)});
      }
    }
  }

  arr.vertex_lines_.assign(arr.vertices_.size(), {});
  arr.outgoing_.assign(arr.vertices_.size(), {});
  std::vector<Vec> he_dir;
  const auto add_edges = [&](std::vector<int>& chain, bool by_x, int support, const Vec& forward) {
    std::sort(chain.begin(), chain.end(), [&](int u, int v) {
      return by_x ? arr.vertices_[u].x < arr.vertices_[v].x : arr.vertices_[u].y < arr.vertices_[v].y;
    });
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      const int h = static_cast<int>(arr.half_edges_.size());
      arr.half_edges_.push_back({chain[k], -1, -1, support});
      arr.half_edges_.push_back({chain[k + 1], -1, -1, support});
      arr.outgoing_[chain[k]].push_back(h);
      arr.outgoing_[chain[k + 1]].push_back(h + 1);
      he_dir.push_back(forward);
      he_dir.push_back(-forward);
    }
  };
  for (std::size_t i = 0; i < n_lines; ++i) {
    add_edges(on_line[i], ls[i].b() != 0, static_cast<int>(i), forward_direction(ls[i]));
    for (int v : on_line[i]) arr.vertex_lines_[v].push_back(static_cast<int>(i));
  }
  add_edges(on_side[0], true, kBottom, {1, 0});
  add_edges(on_side[1], false, kRight, {0, 1});
  add_edges(on_side[2], true, kTop, {1, 0});
  add_edges(on_side[3], false, kLeft, {0, 1});

  // Rotation system, then next(h) = clockwise neighbour of twin(h) at its
  // origin, which keeps each face on the left of its half-edges.
  std::vector<int> position(arr.half_edges_.size());
  for (auto& out : arr.outgoing_) {
    std::sort(out.begin(), out.end(), [&](int g, int h) { return angle_less(he_dir[g], he_dir[h]); });
    for (std::size_t k = 0; k < out.size(); ++k) position[out[k]] = static_cast<int>(k);
  }
  for (std::size_t h = 0; h < arr.half_edges_.size(); ++h) {
    const int t = Arrangement::twin(static_cast<int>(h));
    const auto& out = arr.outgoing_[arr.half_edges_[t].origin];
    const int deg = static_cast<int>(out.size());
    arr.half_edges_[h].next = out[(position[t] + deg - 1) % deg];
  }

  // The upward half-edge on the left side from the lower-left corner has
  // the outside of the box on its left.
  int outer_start = -1;
  for (int h : arr.outgoing_[corners[0]]) {
    if (arr.half_edges_[h].support == kLeft) outer_start = h;
  }
  std::vector<char> seen(arr.half_edges_.size(), 0);
  for (int h = outer_start; !seen[h]; h = arr.half_edges_[h].next) seen[h] = 1;

  for (std::size_t start = 0; start < arr.half_edges_.size(); ++start) {
    if (seen[start]) continue;
    Face face;
    face.half_edge = static_cast<int>(start);
    const int id = static_cast<int>(arr.faces_.size());
    for (int h = static_cast<int>(start); !seen[h]; h = arr.half_edges_[h].next) {
      seen[h] = 1;
      arr.half_edges_[h].face = id;
      face.cycle.push_back(arr.half_edges_[h].origin);
    }
    // Centroid of the first non-degenerate fan triangle. If that lands on an
    // avoided segment, walk weights (1,1,k) and (1,k,1); the two walks lie on
    // different lines, so a finite set of segments cannot cover both.
    const auto& c = face.cycle;
    const Point& p0 = arr.vertices_[c[0]];
    for (std::size_t k = 1; k + 1 < c.size(); ++k) {
      const Point& p1 = arr.vertices_[c[k]];
      const Point& p2 = arr.vertices_[c[k + 1]];
      if (orientation(p0, p1, p2) == Orientation::Collinear) continue;
      const auto blend = [&](long w0, long w1, long w2) -> Point {
        const Rational sum(w0 + w1 + w2);
        return Point((w0 * p0.x + w1 * p1.x + w2 * p2.x) / sum, (w0 * p0.y + w1 * p1.y + w2 * p2.y) / sum);
      };
      const auto clear = [&](const Point& q) {
        return std::none_of(avoid.begin(), avoid.end(), [&](const Segment& s) { return on_segment(q, s); });
      };
      face.representative = blend(1, 1, 1);
      for (long w = 2; !clear(face.representative); ++w) {
        face.representative = blend(1, 1, w);
        if (clear(face.representative)) break;
        face.representative = blend(1, w, 1);
      }
      break;
    }
    arr.faces_.push_back(std::move(face));
  }
  return arr;
}

// ---------------------------------------------------------------------------
// Depths

namespace {

void require_boundary_lines(const Arrangement& arr, const std::vector<VertexWedgeSystem>& systems) {
  for (const auto& s : systems) {
    for (const auto& l : s.boundary_lines) {
      if (arr.line_index(l) < 0) {
        throw ContractViolation("wedge boundary line " + to_string(l) + " missing from arrangement");
      }
    }
  }
}

}  // namespace

std::vector<int> face_depths(const Arrangement& arr, const std::vector<VertexWedgeSystem>& systems) {
  require_boundary_lines(arr, systems);
  std::vector<int> depth(arr.faces().size(), 0);
  for (std::size_t f = 0; f < depth.size(); ++f) {
    const Point& rep = arr.faces()[f].representative;
    for (const auto& s : systems) depth[f] += s.contains(rep) ? 1 : 0;
  }
  return depth;
}

std::vector<int> face_depths_by_traversal(const Arrangement& arr,
                                          const std::vector<VertexWedgeSystem>& systems) {
  require_boundary_lines(arr, systems);
  const auto& faces = arr.faces();
  std::vector<int> depth(faces.size(), -1);
  if (faces.empty()) return depth;

  // Only a system whose apex lies on the crossed line can change membership.
  std::vector<std::vector<std::size_t>> apex_on(arr.lines().size());
  for (std::size_t l = 0; l < arr.lines().size(); ++l) {
    for (std::size_t s = 0; s < systems.size(); ++s) {
      if (arr.lines()[l].contains(systems[s].vertex)) apex_on[l].push_back(s);
    }
  }

  const auto& hes = arr.half_edges();
  std::deque<int> queue{0};
  depth[0] = 0;
  for (const auto& s : systems) depth[0] += s.contains(faces[0].representative) ? 1 : 0;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    int h = faces[f].half_edge;
    do {
      const int g = hes[Arrangement::twin(h)].face;
      const int support = hes[h].support;
      if (g >= 0 && depth[g] < 0 && support >= 0) {
        int d = depth[f];
        for (std::size_t s : apex_on[support]) {
          d -= systems[s].contains(faces[f].representative) ? 1 : 0;
          d += systems[s].contains(faces[g].representative) ? 1 : 0;
        }
        depth[g] = d;
        queue.push_back(g);
      }
      h = hes[h].next;
    } while (h != faces[f].half_edge);
  }
  return depth;
}

}  // namespace opaque
