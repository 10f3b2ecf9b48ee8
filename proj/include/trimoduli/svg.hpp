#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trimoduli/chart_angle.hpp"
#include "trimoduli/chart_sideratio.hpp"
#include "trimoduli/error.hpp"
#include "trimoduli/montecarlo.hpp"

namespace trimoduli {

enum class Projection { Barycentric2D, Oblique3D };

constexpr std::string_view name(Projection p) {
  return p == Projection::Barycentric2D ? "barycentric" : "oblique";
}

struct RenderSpec {
  Chart chart = Chart::SideRatio;
  int width = 800;
  int height = 800;
  bool shade_regions = false;
  bool show_landmarks = true;
  Projection projection = Projection::Barycentric2D;  // sigma chart only
  std::vector<ChartPoint2> overlay2;                  // side-ratio markers
  std::vector<ChartPoint3> overlay3;                  // sigma markers
};

namespace svg_detail {

// Fixed three decimals, trailing zeros trimmed. std::to_chars is locale
// independent, which keeps the output byte-identical everywhere.
inline std::string fmt(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  std::string s(buf, res.ptr);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

using Pt = std::pair<double, double>;

struct SvgBuilder {
  std::string out;

  void open(int w, int h, const std::string& data_attrs) {
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(w) + "\" height=\"" + std::to_string(h) +
           "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) +
           "\" " + data_attrs + ">\n";
    out += "<rect width=\"" + std::to_string(w) + "\" height=\"" +
           std::to_string(h) + "\" fill=\"#ffffff\"/>\n";
  }

  void line(Pt a, Pt b, const std::string& style) {
    out += "<line x1=\"" + fmt(a.first) + "\" y1=\"" + fmt(a.second) +
           "\" x2=\"" + fmt(b.first) + "\" y2=\"" + fmt(b.second) + "\" " +
           style + "/>\n";
  }

  static std::string points_attr(const std::vector<Pt>& pts) {
    std::string s;
    for (const auto& p : pts) {
      if (!s.empty()) s += " ";
      s += fmt(p.first) + "," + fmt(p.second);
    }
    return s;
  }

  void polyline(const std::vector<Pt>& pts, const std::string& style) {
    out += "<polyline points=\"" + points_attr(pts) + "\" fill=\"none\" " +
           style + "/>\n";
  }

  void polygon(const std::string& id, const std::vector<Pt>& pts,
               const std::string& style) {
    out += "<polygon";
    if (!id.empty()) out += " id=\"" + id + "\"";
    out += " points=\"" + points_attr(pts) + "\" " + style + "/>\n";
  }

  void circle(Pt c, double r, const std::string& style) {
    out += "<circle cx=\"" + fmt(c.first) + "\" cy=\"" + fmt(c.second) +
           "\" r=\"" + fmt(r) + "\" " + style + "/>\n";
  }

  void text(Pt p, std::string_view label, const std::string& style) {
    out += "<text x=\"" + fmt(p.first) + "\" y=\"" + fmt(p.second) + "\" " +
           style + ">" + std::string(label) + "</text>\n";
  }

  void overlay_marker(Pt p) {
    circle(p, 5.0,
           "class=\"overlay\" fill=\"none\" stroke=\"#e65100\" stroke-width=\"2\"");
    line({p.first - 7.0, p.second}, {p.first + 7.0, p.second},
         "class=\"overlay\" stroke=\"#e65100\" stroke-width=\"1\"");
    line({p.first, p.second - 7.0}, {p.first, p.second + 7.0},
         "class=\"overlay\" stroke=\"#e65100\" stroke-width=\"1\"");
  }

  void close() { out += "</svg>\n"; }
};

inline const std::string kLabelStyle =
    "font-family=\"sans-serif\" font-size=\"15\" fill=\"#333333\"";

inline constexpr int kArcSegments = 256;

inline std::string render_sideratio(const RenderSpec& spec) {
  const double side = std::min(spec.width, spec.height);
  const double pad = 0.1 * side;
  const double scale = side - 2.0 * pad;
  auto X = [&](double x) { return pad + x * scale; };
  auto Y = [&](double y) { return spec.height - pad - y * scale; };
  auto map = [&](double x, double y) { return Pt{X(x), Y(y)}; };

  SvgBuilder svg;
  svg.open(spec.width, spec.height,
           "data-chart=\"sideratio\" data-unit-scale=\"" + fmt(scale) +
               "\" data-origin-x=\"" + fmt(X(0.0)) + "\" data-origin-y=\"" +
               fmt(Y(0.0)) + "\"");

  // Unit circle arc from D (45 deg) up to B (90 deg), flattened.
  auto arc_point = [&](int k) {
    const double theta =
        kQuarterPi + kQuarterPi * static_cast<double>(k) / kArcSegments;
    return map(std::cos(theta), std::sin(theta));
  };

  if (spec.shade_regions) {
    std::vector<Pt> obtuse{map(0.0, 1.0), map(0.5, 0.5),
                           map(kInvSqrt2, kInvSqrt2)};
    for (int k = 1; k < kArcSegments; ++k) obtuse.push_back(arc_point(k));
    svg.polygon("region-obtuse", obtuse, "fill=\"#f3c3bd\" stroke=\"none\"");

    std::vector<Pt> acute{map(0.0, 1.0), map(1.0, 1.0),
                          map(kInvSqrt2, kInvSqrt2)};
    for (int k = 1; k < kArcSegments; ++k) acute.push_back(arc_point(k));
    svg.polygon("region-acute", acute, "fill=\"#bdd4f3\" stroke=\"none\"");
  }

  // Axes with small arrow heads.
  const std::string axis = "stroke=\"#666666\" stroke-width=\"1\"";
  svg.line(map(0.0, 0.0), map(1.08, 0.0), axis);
  svg.line(map(0.0, 0.0), map(0.0, 1.08), axis);
  svg.polygon("", {map(1.08, 0.0), {X(1.08) - 9, Y(0.0) - 4}, {X(1.08) - 9, Y(0.0) + 4}},
              "fill=\"#666666\"");
  svg.polygon("", {map(0.0, 1.08), {X(0.0) - 4, Y(1.08) + 9}, {X(0.0) + 4, Y(1.08) + 9}},
              "fill=\"#666666\"");
  svg.text({X(1.08) + 8, Y(0.0) + 5}, "x", kLabelStyle);
  svg.text({X(0.0) - 5, Y(1.08) - 10}, "y", kLabelStyle);

  // Construction lines: diagonal to E, its dashed continuation to A, the
  // side AC and the quarter circle through A and B.
  const std::string faint = "stroke=\"#aaaaaa\" stroke-width=\"1\"";
  const std::string faint_dash =
      "stroke=\"#aaaaaa\" stroke-width=\"1\" stroke-dasharray=\"5 4\"";
  svg.line(map(0.0, 0.0), map(0.5, 0.5), faint);
  svg.line(map(0.5, 0.5), map(1.0, 0.0), faint_dash);
  svg.line(map(1.0, 0.0), map(1.0, 1.0), faint);
  std::vector<Pt> quarter;
  for (int k = 0; k <= kArcSegments; ++k) {
    const double theta = kHalfPi * static_cast<double>(k) / kArcSegments;
    quarter.push_back(map(std::cos(theta), std::sin(theta)));
  }
  svg.polyline(quarter, faint);

  // Region boundary: solid where the edge belongs to the region, dashed
  // where it is excluded.
  const std::string edge = "stroke=\"#c62828\" stroke-width=\"1.5\"";
  const std::string edge_dash =
      "stroke=\"#c62828\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"";
  svg.line(map(0.0, 1.0), map(1.0, 1.0), edge);
  svg.line(map(1.0, 1.0), map(0.5, 0.5), edge);
  svg.line(map(0.0, 1.0), map(0.5, 0.5), edge_dash);

  // The right-triangle arc BD, emphasized.
  std::vector<Pt> arc;
  for (int k = 0; k <= kArcSegments; ++k) arc.push_back(arc_point(k));
  svg.polyline(arc, "stroke=\"#8e0000\" stroke-width=\"2.5\"");

  if (spec.show_landmarks) {
    auto label_offset = [](std::string_view n) -> Pt {
      if (n == "A") return {6, 18};
      if (n == "B") return {-16, -8};
      if (n == "C") return {8, -8};
      if (n == "D") return {10, 4};
      if (n == "E") return {-22, 16};
      return {-16, 18};  // O
    };
    for (const auto& lm : kLandmarks2) {
      const Pt p = map(lm.x, lm.y);
      if (lm.in_region) {
        svg.circle(p, 3.5, "fill=\"#8e0000\" stroke=\"none\"");
      } else {
        svg.circle(p, 3.5, "fill=\"#ffffff\" stroke=\"#8e0000\" stroke-width=\"1.5\"");
      }
      const Pt off = label_offset(lm.name);
      svg.text({p.first + off.first, p.second + off.second}, lm.name, kLabelStyle);
    }
  }

  for (const auto& p : spec.overlay2) svg.overlay_marker(map(p.x, p.y));

  svg.close();
  return svg.out;
}

// Shared drawing for the plane chart once a projection to world coordinates
// is chosen. `project` maps plane coordinates to abstract 2D; the builder
// then fits the world bounding box into the pixel frame.
template <typename ProjectFn>
inline std::string render_sigma_common(const RenderSpec& spec, ProjectFn project,
                                       bool oblique) {
  std::vector<Pt> world_probe;
  for (const auto& lm : kLandmarks3) world_probe.push_back(project(lm.x, lm.y, lm.z));
  if (oblique) {
    const double reach = 1.35 * kPi;
    world_probe.push_back(project(reach, 0.0, 0.0));
    world_probe.push_back(project(0.0, reach, 0.0));
    world_probe.push_back(project(0.0, 0.0, reach));
  }
  double wx0 = world_probe[0].first, wx1 = wx0;
  double wy0 = world_probe[0].second, wy1 = wy0;
  for (const auto& p : world_probe) {
    wx0 = std::min(wx0, p.first);
    wx1 = std::max(wx1, p.first);
    wy0 = std::min(wy0, p.second);
    wy1 = std::max(wy1, p.second);
  }
  const double pad = 0.08 * std::min(spec.width, spec.height);
  const double sc = std::min((spec.width - 2.0 * pad) / (wx1 - wx0),
                             (spec.height - 2.0 * pad) / (wy1 - wy0));
  const double ox = (spec.width - (wx1 - wx0) * sc) / 2.0 - wx0 * sc;
  const double oy = spec.height - (spec.height - (wy1 - wy0) * sc) / 2.0 + wy0 * sc;
  auto map = [&](double x, double y, double z) {
    const Pt w = project(x, y, z);
    return Pt{ox + w.first * sc, oy - w.second * sc};
  };
  auto map_lm = [&](std::string_view n) -> Pt {
    for (const auto& lm : kLandmarks3) {
      if (lm.name == n) return map(lm.x, lm.y, lm.z);
    }
    return {0, 0};
  };

  SvgBuilder svg;
  svg.open(spec.width, spec.height,
           std::string("data-chart=\"sigma\" data-projection=\"") +
               (oblique ? "oblique" : "barycentric") + "\"");

  if (spec.shade_regions) {
    svg.polygon("region-obtuse-apq", {map_lm("A"), map_lm("P"), map_lm("Q")},
                "fill=\"#f3c3bd\" stroke=\"none\"");
    svg.polygon("region-obtuse-cpr", {map_lm("C"), map_lm("P"), map_lm("R")},
                "fill=\"#f3c3bd\" stroke=\"none\"");
    svg.polygon("region-obtuse-bqr", {map_lm("B"), map_lm("Q"), map_lm("R")},
                "fill=\"#f3c3bd\" stroke=\"none\"");
    svg.polygon("region-acute", {map_lm("P"), map_lm("Q"), map_lm("R")},
                "fill=\"#bdd4f3\" stroke=\"none\"");
  }

  if (oblique) {
    const double reach = 1.35 * kPi;
    const std::string axis = "stroke=\"#666666\" stroke-width=\"1\"";
    svg.line(map(0, 0, 0), map(reach, 0, 0), axis);
    svg.line(map(0, 0, 0), map(0, reach, 0), axis);
    svg.line(map(0, 0, 0), map(0, 0, reach), axis);
    auto xt = map(reach, 0, 0), yt = map(0, reach, 0), zt = map(0, 0, reach);
    svg.text({xt.first + 8, xt.second + 5}, "x", kLabelStyle);
    svg.text({yt.first + 8, yt.second + 5}, "y", kLabelStyle);
    svg.text({zt.first - 4, zt.second - 8}, "z", kLabelStyle);

    // Visible edges of the cube with corner pi/2.
    const std::string cube = "stroke=\"#999999\" stroke-width=\"1\"";
    const std::array<std::pair<const char*, const char*>, 9> edges{{
        {"F", "Q"}, {"D", "P"}, {"D", "R"}, {"R", "F"}, {"R", "S"},
        {"S", "P"}, {"S", "Q"}, {"P", "E"}, {"E", "Q"},
    }};
    for (const auto& [u, v] : edges) svg.line(map_lm(u), map_lm(v), cube);
  }

  // Medians, then the big triangle (dashed: boundary classes are excluded),
  // then the medial triangle carrying the right classes.
  const std::string median =
      "stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"3 3\"";
  svg.line(map_lm("A"), map_lm("R"), median);
  svg.line(map_lm("B"), map_lm("P"), median);
  svg.line(map_lm("C"), map_lm("Q"), median);

  const std::string big =
      "stroke=\"#c62828\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"";
  svg.line(map_lm("A"), map_lm("B"), big);
  svg.line(map_lm("B"), map_lm("C"), big);
  svg.line(map_lm("C"), map_lm("A"), big);

  const std::string medial = "stroke=\"#1a57c2\" stroke-width=\"2\"";
  svg.line(map_lm("P"), map_lm("Q"), medial);
  svg.line(map_lm("Q"), map_lm("R"), medial);
  svg.line(map_lm("R"), map_lm("P"), medial);

  if (spec.show_landmarks) {
    auto label_offset = [&](std::string_view n) -> Pt {
      if (n == "A") return {0, -10};
      if (n == "B") return oblique ? Pt{8, 14} : Pt{-16, 14};
      if (n == "C") return {10, 14};
      if (n == "P") return {10, -6};
      if (n == "Q") return {-18, -6};
      if (n == "R") return {2, 18};
      if (n == "S") return {8, -6};
      if (n == "O") return {-14, 14};
      if (n == "D" || n == "E" || n == "F") return {-16, -6};
      return {8, -8};  // P', Q', R', G
    };
    for (const auto& lm : kLandmarks3) {
      const bool on_plane = std::abs(lm.x + lm.y + lm.z - kPi) < 1e-9;
      if (!oblique && !on_plane) continue;  // cube/axis points need depth
      const Pt p = map(lm.x, lm.y, lm.z);
      if (lm.represents_triangle) {
        svg.circle(p, 3.5, "fill=\"#1a57c2\" stroke=\"none\"");
      } else {
        svg.circle(p, 3.5, "fill=\"#ffffff\" stroke=\"#1a57c2\" stroke-width=\"1.5\"");
      }
      const Pt off = label_offset(lm.name);
      svg.text({p.first + off.first, p.second + off.second}, lm.name, kLabelStyle);
    }
  }

  for (const auto& p : spec.overlay3) svg.overlay_marker(map(p.x, p.y, p.z));

  svg.close();
  return svg.out;
}

inline std::string render_sigma(const RenderSpec& spec) {
  if (spec.projection == Projection::Barycentric2D) {
    // Isometric embedding of the plane triangle: side length pi*sqrt(2),
    // B at the origin, C on the x axis, A on top.
    const double s = kPi * std::numbers::sqrt2;
    const double h = s * std::numbers::sqrt3 / 2.0;
    auto project = [=](double x, double y, double z) {
      (void)x;
      return Pt{(y * s + z * s / 2.0) / kPi, z * h / kPi};
    };
    return render_sigma_common(spec, project, false);
  }
  // Oblique projection with the y axis receding at 45 degrees, foreshortened
  // like the reference drawing (0.3/0.5 of the axis unit).
  const double ky = 0.3 * (std::numbers::sqrt2 / 2.0) / 0.5;
  auto project = [=](double x, double y, double z) {
    return Pt{x + ky * y, z + ky * y};
  };
  return render_sigma_common(spec, project, true);
}

}  // namespace svg_detail

inline std::string render_svg(const RenderSpec& spec) {
  if (spec.width < 64 || spec.height < 64) {
    raise(ErrorCode::InvalidSpec, "figure dimensions must be at least 64px");
  }
  return spec.chart == Chart::SideRatio ? svg_detail::render_sideratio(spec)
                                        : svg_detail::render_sigma(spec);
}

inline void write_svg(const RenderSpec& spec, const std::string& path) {
  const std::string body = render_svg(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoError, "cannot open output file: " + path);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!out) raise(ErrorCode::IoError, "failed writing output file: " + path);
}

}  // namespace trimoduli
