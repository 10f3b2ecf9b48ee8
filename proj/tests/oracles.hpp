#pragma once

// Independent reference implementations used only by the tests. They compute
// the same quantities as the library through different routes (law of
// cosines instead of half-angle form, quadrature instead of closed form), so
// agreement is meaningful.

#include <algorithm>
#include <array>
#include <cmath>

#include "trimoduli/rng.hpp"
#include "trimoduli/triangle.hpp"

namespace oracles {

// Angle opposite `opp` straight from the law of cosines.
inline double law_of_cosines_angle(double opp, double p, double q) {
  const double arg = (p * p + q * q - opp * opp) / (2.0 * p * q);
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

inline std::array<double, 3> angles_by_law_of_cosines(double a, double b, double c) {
  std::array<double, 3> v{law_of_cosines_angle(a, b, c),
                          law_of_cosines_angle(b, a, c),
                          law_of_cosines_angle(c, a, b)};
  std::sort(v.begin(), v.end());
  return v;
}

// Sign of a^2 + b^2 - c^2 on the raw (unsorted, unscaled) sides in extended
// precision: +1 acute, 0 right, -1 obtuse.
inline int pythagoras_sign(double a, double b, double c) {
  std::array<long double, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  const long double d = v[0] * v[0] + v[1] * v[1] - v[2] * v[2];
  return d > 0.0L ? 1 : (d < 0.0L ? -1 : 0);
}

// Adaptive Simpson integration.
inline double simpson(double (*f)(double), double lo, double hi, double eps,
                      int depth = 24) {
  struct Rec {
    static double step(double (*f)(double), double a, double b, double fa,
                       double fm, double fb, double whole, double eps, int depth) {
      const double m = 0.5 * (a + b);
      const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      const double flm = f(lm), frm = f(rm);
      const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps) {
        return left + right + (left + right - whole) / 15.0;
      }
      return step(f, a, m, fa, flm, fm, left, eps * 0.5, depth - 1) +
             step(f, m, b, fm, frm, fb, right, eps * 0.5, depth - 1);
    }
  };
  const double m = 0.5 * (lo + hi);
  const double fa = f(lo), fm = f(m), fb = f(hi);
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  return Rec::step(f, lo, hi, fa, fm, fb, whole, eps, depth);
}

// Width of the horizontal slice of the obtuse part of the side-ratio region:
// x runs from 1 - y to min(y, sqrt(1 - y^2)).
inline double obtuse_slice_width(double y) {
  const double upper = std::min(y, std::sqrt(std::max(0.0, 1.0 - y * y)));
  return std::max(0.0, upper - (1.0 - y));
}

inline double obtuse_region_area_by_quadrature() {
  return simpson(&obtuse_slice_width, 0.5, 1.0, 1e-12);
}

// Width of the slice of the whole region: x from 1 - y to y.
inline double total_slice_width(double y) { return std::max(0.0, 2.0 * y - 1.0); }

inline double total_region_area_by_quadrature() {
  return simpson(&total_slice_width, 0.5, 1.0, 1e-12);
}

// Random well-formed triangle for property tests: uniform shape from the
// angle simplex, random log-uniform scale, random side order.
struct TriangleGen {
  trimoduli::Xoshiro256PlusPlus rng;

  explicit TriangleGen(std::uint64_t seed) : rng(seed) {}

  trimoduli::Angles random_angles() {
    for (;;) {
      double u = rng.uniform01();
      double v = rng.uniform01();
      if (u > v) std::swap(u, v);
      const double x = u * trimoduli::kPi;
      const double y = (v - u) * trimoduli::kPi;
      const double z = (1.0 - v) * trimoduli::kPi;
      if (x > 1e-9 && y > 1e-9 && z > 1e-9) {
        return trimoduli::renormalize_angles(x, y, z);
      }
    }
  }

  double random_scale() {
    return std::pow(10.0, rng.uniform01() * 12.0 - 6.0);
  }

  trimoduli::Sides random_sides() {
    const trimoduli::CanonicalSides base =
        trimoduli::sides_of_angles(random_angles());
    const double k = random_scale();
    std::array<double, 3> v{base.a * k, base.b * k, base.c * k};
    // Fisher-Yates on three entries.
    const auto r = rng.next();
    std::swap(v[2], v[r % 3]);
    std::swap(v[1], v[(r >> 8) % 2]);
    return {v[0], v[1], v[2]};
  }
};

}  // namespace oracles
