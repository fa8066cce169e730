#include "opaque/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace opaque {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kPadding = 20.0;
// Marker size in pixels. It says nothing about the geometry: an isolated
// point has no extent.
constexpr double kPointRadius = 3.5;

struct Viewport {
  double xmin = 0, ymin = 0, scale = 1, height = 0;

  void fit(const std::vector<Segment>& segments) {
    double xmax = 0, ymax = 0;
    bool first = true;
    for (const auto& s : segments) {
      for (const Point* p : {&s.a, &s.b}) {
        const double x = p->x.get_d();
        const double y = p->y.get_d();
        if (first) {
          xmin = xmax = x;
          ymin = ymax = y;
          first = false;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    scale = (kCanvas - 2 * kPadding) / span;
    height = (ymax - ymin) * scale + 2 * kPadding;
  }

  std::string at(const Point& p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", (p.x.get_d() - xmin) * scale + kPadding,
                  height - ((p.y.get_d() - ymin) * scale + kPadding));
    return buf;
  }
};

}  // namespace

std::string render_svg(const CoverageResult& result) {
  Viewport view;
  view.fit(result.barrier_segments);
  const double width = kCanvas;
  std::string out;
  char header[256];
  std::snprintf(header, sizeof header,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\">\n"
                "<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n",
                width, view.height);
  out += header;

  out += "<g fill=\"#9cc3e6\" stroke=\"#3a6ea5\" stroke-width=\"0.5\">\n";
  for (const auto& region : result.regions) {
    out += "<polygon points=\"";
    for (std::size_t i = 0; i < region.boundary.size(); ++i) {
      if (i > 0) out += ' ';
      out += view.at(region.boundary[i]);
    }
    out += "\"/>\n";
  }
  out += "</g>\n<g stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
  for (const auto& s : result.barrier_segments) {
    const std::string a = view.at(s.a);
    const std::string b = view.at(s.b);
    const auto comma_a = a.find(',');
    const auto comma_b = b.find(',');
    out += "<line x1=\"" + a.substr(0, comma_a) + "\" y1=\"" + a.substr(comma_a + 1) + "\" x2=\"" +
           b.substr(0, comma_b) + "\" y2=\"" + b.substr(comma_b + 1) + "\"/>\n";
  }
  out += "</g>\n<g fill=\"#d62728\">\n";
  for (const auto& p : result.isolated_points) {
    const std::string c = view.at(p);
    const auto comma = c.find(',');
    char r[32];
    std::snprintf(r, sizeof r, "%.1f", kPointRadius);
    out += "<circle cx=\"" + c.substr(0, comma) + "\" cy=\"" + c.substr(comma + 1) + "\" r=\"" + r + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace opaque
