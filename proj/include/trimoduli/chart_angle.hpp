#pragma once

#include <array>
#include <cmath>
#include <string_view>
#include <utility>
#include <vector>

#include "trimoduli/chart_sideratio.hpp"
#include "trimoduli/triangle.hpp"

namespace trimoduli {

// Point on the plane x + y + z = pi.
struct ChartPoint3 {
  double x, y, z;
};

enum class Locus3 {
  InteriorPQR,
  EdgePQ,
  EdgeQR,
  EdgePR,
  TriangleAPQ,
  TriangleCPR,
  TriangleBQR,
  PointPrime,
  Centroid,
};

constexpr std::string_view name(Locus3 l) {
  switch (l) {
    case Locus3::InteriorPQR: return "InteriorPQR";
    case Locus3::EdgePQ: return "EdgePQ";
    case Locus3::EdgeQR: return "EdgeQR";
    case Locus3::EdgePR: return "EdgePR";
    case Locus3::TriangleAPQ: return "TriangleAPQ";
    case Locus3::TriangleCPR: return "TriangleCPR";
    case Locus3::TriangleBQR: return "TriangleBQR";
    case Locus3::PointPrime: return "PointPrime";
    case Locus3::Centroid: return "Centroid";
  }
  return "?";
}

struct Landmark3 {
  std::string_view name;
  double x, y, z;
  // True for the points that are themselves triangle classes (the medial
  // midpoints P', Q', R' and the centroid); the rest are boundary or
  // construction points.
  bool represents_triangle;
};

// Area of the big triangle ABC cut out of the plane by the positive octant.
inline constexpr double kSigmaTriangleArea =
    std::numbers::sqrt3 / 2.0 * kPi * kPi;

inline constexpr std::array<Landmark3, 15> kLandmarks3{{
    {"A", 0.0, 0.0, kPi, false},
    {"B", kPi, 0.0, 0.0, false},
    {"C", 0.0, kPi, 0.0, false},
    {"P", 0.0, kHalfPi, kHalfPi, false},
    {"Q", kHalfPi, 0.0, kHalfPi, false},
    {"R", kHalfPi, kHalfPi, 0.0, false},
    {"P'", kHalfPi, kQuarterPi, kQuarterPi, true},
    {"Q'", kQuarterPi, kHalfPi, kQuarterPi, true},
    {"R'", kQuarterPi, kQuarterPi, kHalfPi, true},
    {"G", kThirdPi, kThirdPi, kThirdPi, true},
    {"S", kHalfPi, kHalfPi, kHalfPi, false},
    {"D", 0.0, kHalfPi, 0.0, false},
    {"E", 0.0, 0.0, kHalfPi, false},
    {"F", kHalfPi, 0.0, 0.0, false},
    {"O", 0.0, 0.0, 0.0, false},
}};

// Canonical chart point: coordinates sorted ascending.
inline ChartPoint3 to_chart3(const Angles& t) {
  std::array<double, 3> v{t.x, t.y, t.z};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

// All distinct coordinate permutations (1, 3 or 6 points). Duplicates are
// removed by exact comparison; the result is sorted lexicographically.
inline std::vector<ChartPoint3> orbit(const ChartPoint3& p) {
  std::vector<std::array<double, 3>> perms{
      {p.x, p.y, p.z}, {p.x, p.z, p.y}, {p.y, p.x, p.z},
      {p.y, p.z, p.x}, {p.z, p.x, p.y}, {p.z, p.y, p.x}};
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  std::vector<ChartPoint3> out;
  out.reserve(perms.size());
  for (const auto& v : perms) out.push_back({v[0], v[1], v[2]});
  return out;
}

// Membership in the valid-triangle part of the plane: strictly positive
// coordinates (eps_geom exclusion band) summing to pi within kSigmaSumTol.
inline bool on_sigma(const ChartPoint3& p, Tolerance tol = {}) {
  if (!(std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z)))
    return false;
  return p.x > tol.eps_geom && p.y > tol.eps_geom && p.z > tol.eps_geom &&
         std::abs(p.x + p.y + p.z - kPi) <= kSigmaSumTol;
}

// Open medial triangle PQR via barycentric coordinates with respect to
// P, Q, R; algebraically the same condition as "all coordinates below
// pi/2" with the eps_class band.
inline bool in_open_pqr(const ChartPoint3& p, Tolerance tol = {}) {
  const double alpha = 1.0 - 2.0 * p.x / kPi;
  const double beta = 1.0 - 2.0 * p.y / kPi;
  const double gamma = 1.0 - 2.0 * p.z / kPi;
  return alpha > tol.eps_class && beta > tol.eps_class && gamma > tol.eps_class;
}

struct Classified3 {
  ShapeClass shape;
  Locus3 locus;
};

inline Classified3 classify_chart3(const ChartPoint3& p, Tolerance tol = {}) {
  if (!on_sigma(p, tol)) {
    raise(ErrorCode::OutOfSigma, "point is not on the valid-angle plane");
  }
  const ShapeClass cls = classify_angles(Angles{p.x, p.y, p.z}, tol);

  int arg = 0;
  double best = p.x;
  if (p.y > best) { best = p.y; arg = 1; }
  if (p.z > best) { best = p.z; arg = 2; }

  Locus3 locus = Locus3::InteriorPQR;
  if (cls.side_kind == SideKind::Equilateral) {
    locus = Locus3::Centroid;
  } else if (cls.angle_kind == AngleKind::Right) {
    if (cls.side_kind == SideKind::Isosceles) {
      locus = Locus3::PointPrime;
    } else {
      // The coordinate carrying the right angle picks the medial edge.
      locus = arg == 2 ? Locus3::EdgePQ : (arg == 1 ? Locus3::EdgePR : Locus3::EdgeQR);
    }
  } else if (cls.angle_kind == AngleKind::Obtuse) {
    // The coordinate past pi/2 picks the corner triangle.
    locus = arg == 2 ? Locus3::TriangleAPQ
                     : (arg == 1 ? Locus3::TriangleCPR : Locus3::TriangleBQR);
  }
  return {cls, locus};
}

// Medians of ABC: vertex to opposite medial vertex.
enum class MedianLine { AR, BP, CQ };

inline std::pair<std::array<double, 3>, std::array<double, 3>>
median_endpoints(MedianLine m) {
  switch (m) {
    case MedianLine::AR: return {{0.0, 0.0, kPi}, {kHalfPi, kHalfPi, 0.0}};
    case MedianLine::BP: return {{kPi, 0.0, 0.0}, {0.0, kHalfPi, kHalfPi}};
    case MedianLine::CQ: return {{0.0, kPi, 0.0}, {kHalfPi, 0.0, kHalfPi}};
  }
  return {{0, 0, 0}, {0, 0, 0}};
}

// Intersection of two median lines, solved from the best-conditioned
// coordinate pair. Self-test operation; all pairs meet at the centroid.
inline ChartPoint3 intersect_medians(MedianLine m1, MedianLine m2) {
  const auto [p0, e0] = median_endpoints(m1);
  const auto [p1, e1] = median_endpoints(m2);
  std::array<double, 3> d0, d1, rhs;
  for (int i = 0; i < 3; ++i) {
    d0[i] = e0[i] - p0[i];
    d1[i] = e1[i] - p1[i];
    rhs[i] = p1[i] - p0[i];
  }
  constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  double best_det = 0.0;
  double s = 0.0;
  for (const auto& [i, j] : pairs) {
    const double det = d1[i] * d0[j] - d0[i] * d1[j];
    if (std::abs(det) > std::abs(best_det)) {
      best_det = det;
      s = (d1[i] * rhs[j] - rhs[i] * d1[j]) / det;
    }
  }
  return {p0[0] + s * d0[0], p0[1] + s * d0[1], p0[2] + s * d0[2]};
}

inline ChartPoint3 medians_intersection() {
  return intersect_medians(MedianLine::AR, MedianLine::BP);
}

// Point of the median AR at parameter t in (0, 1): t = 0 is A, t = 1 is R.
// Renormalized like every produced angle triple.
inline ChartPoint3 median_point(double t) {
  if (!(t > 0.0 && t < 1.0)) {
    raise(ErrorCode::OutOfRange, "median parameter must lie in (0, 1)");
  }
  const Angles a = renormalize_angles((1.0 - t) * kHalfPi, (1.0 - t) * kHalfPi, t * kPi);
  return {a.x, a.y, a.z};
}

enum class MedianClass { LegsLonger, Equilateral, LegsShorter };

constexpr std::string_view name(MedianClass c) {
  switch (c) {
    case MedianClass::LegsLonger: return "legs_longer";
    case MedianClass::Equilateral: return "equilateral";
    case MedianClass::LegsShorter: return "legs_shorter";
  }
  return "?";
}

// Along AR the repeated angle is (1-t)/2 of a straight angle and the odd one
// is t: legs longer below t = 1/3, equilateral at t = 1/3, shorter above.
inline MedianClass median_leg_relation(double t, Tolerance tol = {}) {
  if (!(t > 0.0 && t < 1.0)) {
    raise(ErrorCode::OutOfRange, "median parameter must lie in (0, 1)");
  }
  const double repeated = (1.0 - t) / 2.0;
  if (nearly_equal(repeated, t, tol.eps_class)) return MedianClass::Equilateral;
  return repeated > t ? MedianClass::LegsLonger : MedianClass::LegsShorter;
}

// Shares of the plane triangle ABC by angle kind: the medial triangle is a
// quarter of it, the three obtuse corners are the rest, the right locus is
// the medial boundary (measure zero).
inline double region_proportion3(RegionKind kind) {
  switch (kind) {
    case RegionKind::Total: return 1.0;
    case RegionKind::Acute: return 0.25;
    case RegionKind::Right: return 0.0;
    case RegionKind::Obtuse: return 0.75;
  }
  return 0.0;
}

inline double region_area3(RegionKind kind) {
  return region_proportion3(kind) * kSigmaTriangleArea;
}

}  // namespace trimoduli
