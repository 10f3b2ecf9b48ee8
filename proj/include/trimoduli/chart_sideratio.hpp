#pragma once

#include <array>
#include <cmath>
#include <string_view>

#include "trimoduli/triangle.hpp"

namespace trimoduli {

// Point in the side-ratio chart: (a/c, b/c) with sides sorted ascending.
struct ChartPoint2 {
  double x, y;
};

enum class Locus2 {
  InteriorAcute,
  InteriorObtuse,
  ArcBD,
  SegmentBC,
  SegmentCD,
  SegmentDE,
  PointC,
  PointD,
};

constexpr std::string_view name(Locus2 l) {
  switch (l) {
    case Locus2::InteriorAcute: return "InteriorAcute";
    case Locus2::InteriorObtuse: return "InteriorObtuse";
    case Locus2::ArcBD: return "ArcBD";
    case Locus2::SegmentBC: return "SegmentBC";
    case Locus2::SegmentCD: return "SegmentCD";
    case Locus2::SegmentDE: return "SegmentDE";
    case Locus2::PointC: return "PointC";
    case Locus2::PointD: return "PointD";
  }
  return "?";
}

enum class RegionKind { Total, Acute, Right, Obtuse };

constexpr std::string_view name(RegionKind k) {
  switch (k) {
    case RegionKind::Total: return "total";
    case RegionKind::Acute: return "acute";
    case RegionKind::Right: return "right";
    case RegionKind::Obtuse: return "obtuse";
  }
  return "?";
}

struct Landmark2 {
  std::string_view name;
  double x, y;
  bool in_region;
};

inline constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// C and D are the only named points that are themselves triangle classes;
// the rest bound the region or anchor the construction.
inline constexpr std::array<Landmark2, 6> kLandmarks2{{
    {"A", 1.0, 0.0, false},
    {"B", 0.0, 1.0, false},
    {"C", 1.0, 1.0, true},
    {"D", kInvSqrt2, kInvSqrt2, true},
    {"E", 0.5, 0.5, false},
    {"O", 0.0, 0.0, false},
}};

inline ChartPoint2 to_chart2(const CanonicalSides& s) { return {s.a, s.b}; }

// Chart membership: 0 < x <= 1, y <= 1, x <= y, x + y > 1. The open edge
// gets an eps_geom exclusion band so near-degenerate points fall out.
inline bool in_region2(const ChartPoint2& p, Tolerance tol = {}) {
  if (!(std::isfinite(p.x) && std::isfinite(p.y))) return false;
  return p.x > 0.0 && p.x <= 1.0 && p.y <= 1.0 && p.x <= p.y &&
         p.x + p.y > 1.0 + tol.eps_geom;
}

// Section of to_chart2: the canonical triangle with sides (x, y, 1).
inline CanonicalSides triangle_of_chart2(const ChartPoint2& p, Tolerance tol = {}) {
  if (!in_region2(p, tol)) {
    raise(ErrorCode::OutOfRegion, "point is not in the side-ratio region");
  }
  return {p.x, p.y, 1.0};
}

struct Classified2 {
  ShapeClass shape;
  Locus2 locus;
};

// The locus is derived from the side classification of (x, y, 1), so the two
// can never disagree.
inline Classified2 classify_chart2(const ChartPoint2& p, Tolerance tol = {}) {
  const CanonicalSides s = triangle_of_chart2(p, tol);
  const ShapeClass cls = classify_sides(s, tol);

  Locus2 locus = Locus2::InteriorAcute;
  if (cls.side_kind == SideKind::Equilateral) {
    locus = Locus2::PointC;
  } else if (cls.angle_kind == AngleKind::Right) {
    locus = cls.side_kind == SideKind::Isosceles ? Locus2::PointD : Locus2::ArcBD;
  } else if (cls.angle_kind == AngleKind::Acute) {
    if (cls.side_kind == SideKind::Isosceles) {
      locus = cls.leg_relation == LegRelation::LegsLonger ? Locus2::SegmentBC
                                                          : Locus2::SegmentCD;
    }
  } else {
    locus = cls.side_kind == SideKind::Isosceles ? Locus2::SegmentDE
                                                 : Locus2::InteriorObtuse;
  }
  return {cls, locus};
}

// Exact areas of the chart region and its acute/obtuse parts. The right
// locus is the arc, which has measure zero. (4 - pi) and (pi - 2) are both
// exact in double, so Acute + Obtuse == Total holds exactly.
inline double region_area2(RegionKind kind) {
  switch (kind) {
    case RegionKind::Total: return 0.25;
    case RegionKind::Acute: return (4.0 - kPi) / 8.0;
    case RegionKind::Right: return 0.0;
    case RegionKind::Obtuse: return (kPi - 2.0) / 8.0;
  }
  return 0.0;
}

}  // namespace trimoduli
