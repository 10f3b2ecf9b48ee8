#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>

#include "trimoduli/error.hpp"
#include "trimoduli/tolerance.hpp"

namespace trimoduli {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = kPi / 2.0;
inline constexpr double kThirdPi = kPi / 3.0;
inline constexpr double kQuarterPi = kPi / 4.0;

// Every angle triple handed out by the library sums to pi within this bound.
inline constexpr double kSigmaSumTol = 1e-12;
// Input slack accepted by make_angles before renormalization kicks in.
inline constexpr double kAngleSumSlack = 1e-6;

struct Sides {
  double a, b, c;
};

// Similarity-class representative: sides sorted ascending, longest scaled
// to 1. Produced by canonicalize and friends; treat as read-only.
struct CanonicalSides {
  double a, b, c;
};

// Interior angles in radians.
struct Angles {
  double x, y, z;
};

enum class AngleKind { Acute, Right, Obtuse };
enum class SideKind { Equilateral, Isosceles, Scalene };
enum class LegRelation { LegsLonger, LegsShorter };

constexpr std::string_view name(AngleKind k) {
  switch (k) {
    case AngleKind::Acute: return "acute";
    case AngleKind::Right: return "right";
    case AngleKind::Obtuse: return "obtuse";
  }
  return "?";
}

constexpr std::string_view name(SideKind k) {
  switch (k) {
    case SideKind::Equilateral: return "equilateral";
    case SideKind::Isosceles: return "isosceles";
    case SideKind::Scalene: return "scalene";
  }
  return "?";
}

constexpr std::string_view name(LegRelation r) {
  return r == LegRelation::LegsLonger ? "legs_longer" : "legs_shorter";
}

struct ShapeClass {
  AngleKind angle_kind;
  SideKind side_kind;
  // Set iff side_kind == Isosceles: whether the repeated sides are longer
  // or shorter than the remaining one.
  std::optional<LegRelation> leg_relation;

  bool operator==(const ShapeClass&) const = default;
};

inline Sides validate_triangle(double a, double b, double c, Tolerance tol = {}) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c)) ||
      a <= 0.0 || b <= 0.0 || c <= 0.0) {
    raise(ErrorCode::NonPositiveSide, "sides must be finite and positive");
  }
  const double perimeter = a + b + c;
  const double longest = std::max({a, b, c});
  // Strict triangle inequality; equality within eps_geom of the perimeter
  // counts as degenerate so the check is scale invariant.
  if (perimeter - 2.0 * longest <= tol.eps_geom * perimeter) {
    raise(ErrorCode::DegenerateTriangle,
          "sides fail the strict triangle inequality");
  }
  return {a, b, c};
}

inline CanonicalSides canonicalize(const Sides& s) {
  std::array<double, 3> v{s.a, s.b, s.c};
  std::sort(v.begin(), v.end());
  return {v[0] / v[2], v[1] / v[2], 1.0};
}

// Rescales a positive triple so it sums to pi (a few ulps at worst). The sum
// is taken over the sorted values, so permuted inputs rescale identically.
inline Angles renormalize_angles(double x, double y, double z) {
  std::array<double, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  const double scale = kPi / (v[0] + v[1] + v[2]);
  return {x * scale, y * scale, z * scale};
}

inline Angles make_angles(double x, double y, double z) {
  if (!(std::isfinite(x) && std::isfinite(y) && std::isfinite(z)) ||
      x <= 0.0 || y <= 0.0 || z <= 0.0) {
    raise(ErrorCode::NonPositiveAngle, "angles must be finite and positive");
  }
  if (std::abs((x + y + z) - kPi) > kAngleSumSlack) {
    raise(ErrorCode::AngleSumMismatch, "angles must sum to pi");
  }
  return renormalize_angles(x, y, z);
}

// Interior angle opposite side `opp` with adjacent sides p and q, via
// tan(theta/2) = sqrt((s-p)(s-q) / (s(s-opp))). The doubled excess terms
// keep full accuracy for thin triangles where the arccosine form cancels.
inline double interior_angle(double opp, double p, double q) {
  const double dp = q + opp - p;
  const double dq = p + opp - q;
  const double dm = p + q - opp;
  const double ds = p + q + opp;
  return 2.0 * std::atan2(std::sqrt(dp * dq), std::sqrt(ds * dm));
}

// Ascending interior angles of a canonical triangle, renormalized to sum
// to pi exactly (up to kSigmaSumTol).
inline Angles angles_of_sides(const CanonicalSides& s) {
  std::array<double, 3> v{interior_angle(s.a, s.b, s.c),
                          interior_angle(s.b, s.a, s.c),
                          interior_angle(s.c, s.a, s.b)};
  std::sort(v.begin(), v.end());
  const double scale = kPi / (v[0] + v[1] + v[2]);
  return {v[0] * scale, v[1] * scale, v[2] * scale};
}

// Law of sines; the largest angle maps to the unit side.
inline CanonicalSides sides_of_angles(const Angles& t) {
  std::array<double, 3> v{t.x, t.y, t.z};
  std::sort(v.begin(), v.end());
  const double sw = std::sin(v[2]);
  return {std::sin(v[0]) / sw, std::sin(v[1]) / sw, 1.0};
}

inline ShapeClass classify_sides(const CanonicalSides& s, Tolerance tol = {}) {
  const double a = s.a, b = s.b, c = s.c;
  const double pyth = a * a + b * b - c * c;
  const AngleKind angle = std::abs(pyth) <= tol.eps_class * c * c
                              ? AngleKind::Right
                              : (pyth > 0.0 ? AngleKind::Acute : AngleKind::Obtuse);
  const bool ab = nearly_equal(a, b, tol.eps_class);
  const bool bc = nearly_equal(b, c, tol.eps_class);
  const bool ac = nearly_equal(a, c, tol.eps_class);

  SideKind side = SideKind::Scalene;
  std::optional<LegRelation> legs;
  if (ac || (ab && bc)) {
    side = SideKind::Equilateral;
  } else if (angle == AngleKind::Right) {
    // Only the two legs of a right triangle can be equal; a hypotenuse-side
    // match can show up inside the band only next to the degenerate corner,
    // and is reported as scalene there.
    if (ab) {
      side = SideKind::Isosceles;
      legs = LegRelation::LegsShorter;
    }
  } else if (ab) {
    side = SideKind::Isosceles;
    legs = LegRelation::LegsShorter;
  } else if (bc) {
    side = SideKind::Isosceles;
    legs = LegRelation::LegsLonger;
  }
  return {angle, side, legs};
}

inline ShapeClass classify_angles(const Angles& t, Tolerance tol = {}) {
  std::array<double, 3> v{t.x, t.y, t.z};
  std::sort(v.begin(), v.end());
  const double u = v[0], m = v[1], w = v[2];
  const AngleKind angle = std::abs(w - kHalfPi) <= tol.eps_class * kHalfPi
                              ? AngleKind::Right
                              : (w > kHalfPi ? AngleKind::Obtuse : AngleKind::Acute);
  const bool um = nearly_equal(u, m, tol.eps_class);
  const bool mw = nearly_equal(m, w, tol.eps_class);
  const bool uw = nearly_equal(u, w, tol.eps_class);

  SideKind side = SideKind::Scalene;
  std::optional<LegRelation> legs;
  if (uw || (um && mw)) {
    side = SideKind::Equilateral;
  } else if (angle == AngleKind::Right) {
    if (um) {
      side = SideKind::Isosceles;
      legs = LegRelation::LegsShorter;
    }
  } else if (um) {
    // The repeated angle is the smaller pair, so the repeated sides are the
    // short ones.
    side = SideKind::Isosceles;
    legs = LegRelation::LegsShorter;
  } else if (mw) {
    side = SideKind::Isosceles;
    legs = LegRelation::LegsLonger;
  }
  return {angle, side, legs};
}

}  // namespace trimoduli
