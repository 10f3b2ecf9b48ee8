#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string_view>
#include <thread>
#include <vector>

#include "trimoduli/chart_angle.hpp"
#include "trimoduli/chart_sideratio.hpp"
#include "trimoduli/rng.hpp"

namespace trimoduli {

enum class Chart { SideRatio, AngleSigma };

constexpr std::string_view name(Chart c) {
  return c == Chart::SideRatio ? "sideratio" : "sigma";
}

struct SamplePlan {
  Chart chart = Chart::AngleSigma;
  std::uint64_t n = 1;
  std::uint64_t seed = 1;
  Tolerance tol{};
};

struct ClassStat {
  std::uint64_t count;
  double fraction;
  double exact;
  // Pass band: three binomial sigmas for the positive-measure classes, an
  // absolute fraction ceiling for the measure-zero right class.
  double tolerance;
  bool pass;

  bool operator==(const ClassStat&) const = default;
};

struct ProportionReport {
  Chart chart;
  std::uint64_t n;
  std::uint64_t seed;
  ClassStat acute, right, obtuse;
  bool all_pass;

  bool operator==(const ProportionReport&) const = default;
};

inline constexpr std::uint64_t kSampleChunk = std::uint64_t{1} << 16;
inline constexpr double kRightFractionCeiling = 1e-4;

namespace mc_detail {

// Uniform point of the open simplex scaled to sum pi, by order statistics of
// two uniforms. Points inside the eps_geom exclusion band are redrawn.
inline Angles draw_sigma(Xoshiro256PlusPlus& rng, Tolerance tol) {
  for (;;) {
    double u = rng.uniform01();
    double v = rng.uniform01();
    if (u > v) std::swap(u, v);
    const double x = u * kPi;
    const double y = (v - u) * kPi;
    const double z = (1.0 - v) * kPi;
    if (x > tol.eps_geom && y > tol.eps_geom && z > tol.eps_geom) {
      return renormalize_angles(x, y, z);
    }
  }
}

// Uniform point of the side-ratio region by rejection from the unit square
// (acceptance rate 1/4).
inline ChartPoint2 draw_side_ratio(Xoshiro256PlusPlus& rng, Tolerance tol) {
  for (;;) {
    const ChartPoint2 p{rng.uniform01(), rng.uniform01()};
    if (in_region2(p, tol)) return p;
  }
}

struct Tally {
  std::uint64_t acute = 0, right = 0, obtuse = 0;
};

inline void tally_chunk(Chart chart, std::uint64_t seed, std::uint64_t chunk,
                        std::uint64_t count, Tolerance tol, Tally& out) {
  Xoshiro256PlusPlus rng(chunk_seed(seed, chunk));
  for (std::uint64_t i = 0; i < count; ++i) {
    AngleKind kind;
    if (chart == Chart::AngleSigma) {
      kind = classify_angles(draw_sigma(rng, tol), tol).angle_kind;
    } else {
      const ChartPoint2 p = draw_side_ratio(rng, tol);
      kind = classify_sides({p.x, p.y, 1.0}, tol).angle_kind;
    }
    switch (kind) {
      case AngleKind::Acute: ++out.acute; break;
      case AngleKind::Right: ++out.right; break;
      case AngleKind::Obtuse: ++out.obtuse; break;
    }
  }
}

// Runs fn(chunk, count) for every chunk. Workers stride over chunk indices;
// results land in per-chunk slots, so the outcome is schedule independent.
template <typename Fn>
inline void run_chunks(std::uint64_t n, unsigned workers, Fn&& fn) {
  const std::uint64_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  auto run_stride = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t c = first; c < chunks; c += stride) {
      const std::uint64_t begin = c * kSampleChunk;
      fn(c, std::min<std::uint64_t>(kSampleChunk, n - begin));
    }
  };
  if (workers <= 1 || chunks <= 1) {
    run_stride(0, 1);
    return;
  }
  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back(run_stride, t, nthreads);
  }
  for (auto& th : pool) th.join();
}

}  // namespace mc_detail

inline std::vector<Angles> sample_sigma(std::uint64_t n, std::uint64_t seed,
                                        Tolerance tol = {}) {
  if (n < 1) raise(ErrorCode::OutOfRange, "sample count must be at least 1");
  std::vector<Angles> out;
  out.reserve(n);
  mc_detail::run_chunks(n, 1, [&](std::uint64_t chunk, std::uint64_t count) {
    Xoshiro256PlusPlus rng(chunk_seed(seed, chunk));
    for (std::uint64_t i = 0; i < count; ++i) {
      out.push_back(mc_detail::draw_sigma(rng, tol));
    }
  });
  return out;
}

inline std::vector<ChartPoint2> sample_side_ratio(std::uint64_t n,
                                                  std::uint64_t seed,
                                                  Tolerance tol = {}) {
  if (n < 1) raise(ErrorCode::OutOfRange, "sample count must be at least 1");
  std::vector<ChartPoint2> out;
  out.reserve(n);
  mc_detail::run_chunks(n, 1, [&](std::uint64_t chunk, std::uint64_t count) {
    Xoshiro256PlusPlus rng(chunk_seed(seed, chunk));
    for (std::uint64_t i = 0; i < count; ++i) {
      out.push_back(mc_detail::draw_side_ratio(rng, tol));
    }
  });
  return out;
}

// Empirical class proportions against the exact ones. The report is a pure
// function of the plan: chunked sub-streams plus commutative integer tallies
// make it bit-identical at any worker count.
inline ProportionReport estimate(const SamplePlan& plan, unsigned workers = 1) {
  if (plan.n < 1) raise(ErrorCode::OutOfRange, "sample count must be at least 1");
  const std::uint64_t chunks = (plan.n + kSampleChunk - 1) / kSampleChunk;
  std::vector<mc_detail::Tally> tallies(chunks);
  mc_detail::run_chunks(plan.n, workers, [&](std::uint64_t c, std::uint64_t count) {
    mc_detail::tally_chunk(plan.chart, plan.seed, c, count, plan.tol, tallies[c]);
  });
  mc_detail::Tally sum;
  for (const auto& t : tallies) {
    sum.acute += t.acute;
    sum.right += t.right;
    sum.obtuse += t.obtuse;
  }

  const bool sigma = plan.chart == Chart::AngleSigma;
  const double exact_acute =
      sigma ? region_proportion3(RegionKind::Acute)
            : region_area2(RegionKind::Acute) / region_area2(RegionKind::Total);
  const double exact_obtuse =
      sigma ? region_proportion3(RegionKind::Obtuse)
            : region_area2(RegionKind::Obtuse) / region_area2(RegionKind::Total);
  const double nd = static_cast<double>(plan.n);

  auto band_stat = [&](std::uint64_t count, double exact) {
    const double fraction = static_cast<double>(count) / nd;
    const double band = 3.0 * std::sqrt(exact * (1.0 - exact) / nd);
    return ClassStat{count, fraction, exact, band,
                     std::abs(fraction - exact) <= band};
  };
  // count <= n * 1e-4, compared in integers.
  const ClassStat right{sum.right, static_cast<double>(sum.right) / nd, 0.0,
                        kRightFractionCeiling, sum.right * 10000 <= plan.n};
  const ClassStat acute = band_stat(sum.acute, exact_acute);
  const ClassStat obtuse = band_stat(sum.obtuse, exact_obtuse);
  return {plan.chart, plan.n,   plan.seed,
          acute,      right,    obtuse,
          acute.pass && right.pass && obtuse.pass};
}

namespace mc_detail {

inline bool kind_matches(RegionKind want, AngleKind got) {
  switch (want) {
    case RegionKind::Total: return true;
    case RegionKind::Acute: return got == AngleKind::Acute;
    case RegionKind::Right: return got == AngleKind::Right;
    case RegionKind::Obtuse: return got == AngleKind::Obtuse;
  }
  return false;
}

}  // namespace mc_detail

// Hit-or-miss area estimate. The side-ratio chart samples the unit square;
// the plane chart samples the parallelogram spanned by AB and AC, whose area
// is sqrt(3) pi^2.
inline double area_mc(Chart chart, RegionKind kind, std::uint64_t n,
                      std::uint64_t seed, Tolerance tol = {}, unsigned workers = 1) {
  if (n < 1) raise(ErrorCode::OutOfRange, "sample count must be at least 1");
  const std::uint64_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  mc_detail::run_chunks(n, workers, [&](std::uint64_t c, std::uint64_t count) {
    Xoshiro256PlusPlus rng(chunk_seed(seed, c));
    std::uint64_t local = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
      if (chart == Chart::SideRatio) {
        const ChartPoint2 p{rng.uniform01(), rng.uniform01()};
        if (!in_region2(p, tol)) continue;
        if (mc_detail::kind_matches(kind,
                                    classify_sides({p.x, p.y, 1.0}, tol).angle_kind)) {
          ++local;
        }
      } else {
        const double u = rng.uniform01();
        const double v = rng.uniform01();
        const ChartPoint3 p{u * kPi, v * kPi, (1.0 - u - v) * kPi};
        if (!on_sigma(p, tol)) continue;
        if (mc_detail::kind_matches(
                kind, classify_angles(Angles{p.x, p.y, p.z}, tol).angle_kind)) {
          ++local;
        }
      }
    }
    hits[c] = local;
  });
  std::uint64_t total = 0;
  for (const auto h : hits) total += h;
  const double box =
      chart == Chart::SideRatio ? 1.0 : std::numbers::sqrt3 * kPi * kPi;
  return static_cast<double>(total) / static_cast<double>(n) * box;
}

}  // namespace trimoduli
