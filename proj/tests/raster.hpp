#pragma once

// Minimal SVG scraping and rasterization used to verify the figures: pull a
// polygon's points by element id, then estimate its area by sampling a grid
// with an even-odd point-in-polygon test.

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace raster {

using Pt = std::pair<double, double>;

inline std::string attr_value(const std::string& svg, const std::string& attr) {
  const std::string key = attr + "=\"";
  const auto pos = svg.find(key);
  if (pos == std::string::npos) return {};
  const auto end = svg.find('"', pos + key.size());
  return svg.substr(pos + key.size(), end - pos - key.size());
}

inline std::vector<Pt> polygon_points(const std::string& svg,
                                      const std::string& id) {
  const std::string marker = "id=\"" + id + "\"";
  const auto pos = svg.find(marker);
  if (pos == std::string::npos) return {};
  const auto points_pos = svg.find("points=\"", pos);
  const auto end = svg.find('"', points_pos + 8);
  const std::string raw = svg.substr(points_pos + 8, end - points_pos - 8);

  std::vector<Pt> pts;
  const char* p = raw.c_str();
  char* next = nullptr;
  while (*p) {
    const double x = std::strtod(p, &next);
    if (next == p) break;
    p = next;
    while (*p == ',' || *p == ' ') ++p;
    const double y = std::strtod(p, &next);
    if (next == p) break;
    p = next;
    while (*p == ' ') ++p;
    pts.push_back({x, y});
  }
  return pts;
}

inline bool point_in_polygon(const std::vector<Pt>& poly, double x, double y) {
  bool inside = false;
  for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const auto& [xi, yi] = poly[i];
    const auto& [xj, yj] = poly[j];
    if ((yi > y) != (yj > y) &&
        x < (xj - xi) * (y - yi) / (yj - yi) + xi) {
      inside = !inside;
    }
  }
  return inside;
}

// Fraction of the axis-aligned box [x0,x1] x [y0,y1] covered by the polygon,
// sampled on a grid of cell centers.
inline double polygon_box_fraction(const std::vector<Pt>& poly, double x0,
                                   double y0, double x1, double y1, int grid) {
  long hits = 0;
  for (int i = 0; i < grid; ++i) {
    const double x = x0 + (x1 - x0) * (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      const double y = y0 + (y1 - y0) * (j + 0.5) / grid;
      if (point_in_polygon(poly, x, y)) ++hits;
    }
  }
  return static_cast<double>(hits) / (static_cast<double>(grid) * grid);
}

}  // namespace raster
