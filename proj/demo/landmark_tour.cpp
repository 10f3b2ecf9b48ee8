// Walks the named points of both charts and prints how each one classifies.
// Build target: demo_landmark_tour.

#include <cstdio>

#include "trimoduli/trimoduli.hpp"

using namespace trimoduli;

namespace {

void print_shape(const ShapeClass& cls) {
  std::printf("%s %s", name(cls.angle_kind).data(), name(cls.side_kind).data());
  if (cls.leg_relation) std::printf(" (%s)", name(*cls.leg_relation).data());
}

}  // namespace

int main() {
  std::printf("side-ratio chart landmarks\n");
  for (const auto& lm : kLandmarks2) {
    std::printf("  %-2s (%.6f, %.6f)  ", lm.name.data(), lm.x, lm.y);
    if (!lm.in_region) {
      std::printf("outside the region, no triangle\n");
      continue;
    }
    const Classified2 c = classify_chart2({lm.x, lm.y});
    print_shape(c.shape);
    std::printf("  locus %s\n", name(c.locus).data());
  }

  std::printf("\nangle-plane landmarks\n");
  for (const auto& lm : kLandmarks3) {
    std::printf("  %-2s (%.6f, %.6f, %.6f)  ", lm.name.data(), lm.x, lm.y, lm.z);
    if (!lm.represents_triangle) {
      std::printf("off the triangle locus\n");
      continue;
    }
    const Classified3 c = classify_chart3({lm.x, lm.y, lm.z});
    print_shape(c.shape);
    std::printf("  locus %s\n", name(c.locus).data());
  }

  std::printf("\nmedian sweep t -> class along the equal-legs line\n");
  for (const double t : {0.1, 1.0 / 3.0, 0.45, 0.5, 0.75, 0.95}) {
    const ChartPoint3 p = median_point(t);
    const Classified3 c = classify_chart3(p);
    std::printf("  t = %-8.4f (%.4f, %.4f, %.4f)  ", t, p.x, p.y, p.z);
    print_shape(c.shape);
    std::printf("  legs %s\n", name(median_leg_relation(t)).data());
  }
  return 0;
}
