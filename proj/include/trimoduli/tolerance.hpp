#pragma once

#include <algorithm>
#include <cmath>

namespace trimoduli {

// eps_class is a relative band for classification decisions (right angle,
// repeated sides); eps_geom is an absolute band for membership tests and
// round-trip checks. Both widen together if a caller relaxes them.
struct Tolerance {
  double eps_class = 1e-9;
  double eps_geom = 1e-12;
};

// Relative equality for positive quantities.
inline bool nearly_equal(double u, double v, double eps_rel) {
  return std::abs(u - v) <= eps_rel * std::max(std::abs(u), std::abs(v));
}

}  // namespace trimoduli
