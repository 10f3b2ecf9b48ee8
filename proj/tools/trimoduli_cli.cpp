#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trimoduli/trimoduli.hpp"

namespace {

using namespace trimoduli;

struct CommonOpts {
  double eps_class = 1e-9;
  double eps_geom = 1e-12;
  bool json = true;

  Tolerance tol() const { return {eps_class, eps_geom}; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--eps-class", opts.eps_class,
                  "Relative classification band")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--eps-geom", opts.eps_geom, "Absolute membership band")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--json,!--no-json", opts.json,
                "Emit JSON (default) or plain text");
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
  if (seed_opt->count() > 0) return seed_flag;
  if (const char* env = std::getenv("TRIMODULI_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      raise(ErrorCode::InvalidArguments,
            "TRIMODULI_SEED must be an unsigned integer");
    }
    return v;
  }
  return 1;
}

void print_doc(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_classify(const std::vector<double>& sides,
                 const std::vector<double>& angles_in, bool degrees,
                 const CommonOpts& opts) {
  const Tolerance tol = opts.tol();
  CanonicalSides canon{};
  nlohmann::json input;
  if (!sides.empty()) {
    const Sides s = validate_triangle(sides[0], sides[1], sides[2], tol);
    canon = canonicalize(s);
    input = {{"mode", "sides"}, {"values", sides}};
  } else {
    double x = angles_in[0], y = angles_in[1], z = angles_in[2];
    if (degrees) {
      x *= kPi / 180.0;
      y *= kPi / 180.0;
      z *= kPi / 180.0;
    }
    canon = sides_of_angles(make_angles(x, y, z));
    input = {{"mode", degrees ? "angles-degrees" : "angles"},
             {"values", angles_in}};
  }

  const Angles angles = angles_of_sides(canon);
  const ChartPoint2 p2 = to_chart2(canon);
  const Classified2 c2 = classify_chart2(p2, tol);
  const ChartPoint3 p3 = to_chart3(angles);
  const Classified3 c3 = classify_chart3(p3, tol);

  if (opts.json) {
    print_doc({{"input", input},
               {"canonical_sides", {canon.a, canon.b, canon.c}},
               {"angles", {angles.x, angles.y, angles.z}},
               {"class", shape_class_json(c2.shape)},
               {"chart2", {{"x", p2.x}, {"y", p2.y}, {"locus", std::string(name(c2.locus))}}},
               {"chart3",
                {{"point", {p3.x, p3.y, p3.z}},
                 {"locus", std::string(name(c3.locus))}}}});
  } else {
    std::printf("canonical sides: %.15g %.15g %.15g\n", canon.a, canon.b, canon.c);
    std::printf("angles (rad):    %.15g %.15g %.15g\n", angles.x, angles.y, angles.z);
    std::printf("class:           %s %s", name(c2.shape.angle_kind).data(),
                name(c2.shape.side_kind).data());
    if (c2.shape.leg_relation) {
      std::printf(" (%s)", name(*c2.shape.leg_relation).data());
    }
    std::printf("\nside-ratio chart: (%.15g, %.15g) on %s\n", p2.x, p2.y,
                name(c2.locus).data());
    std::printf("angle chart:      (%.15g, %.15g, %.15g) on %s\n", p3.x, p3.y,
                p3.z, name(c3.locus).data());
  }
  return 0;
}

int run_measure(Chart chart, const CommonOpts& opts) {
  const nlohmann::json doc = measure_json(chart);
  if (opts.json) {
    print_doc(doc);
    return 0;
  }
  if (chart == Chart::SideRatio) {
    std::printf("total area  1/4      = %.15g\n", region_area2(RegionKind::Total));
    std::printf("acute area  (4-pi)/8 = %.15g\n", region_area2(RegionKind::Acute));
    std::printf("obtuse area (pi-2)/8 = %.15g\n", region_area2(RegionKind::Obtuse));
    std::printf("right area  0        = %.15g\n", region_area2(RegionKind::Right));
  } else {
    std::printf("obtuse proportion 3/4 = %.15g\n", region_proportion3(RegionKind::Obtuse));
    std::printf("acute proportion  1/4 = %.15g\n", region_proportion3(RegionKind::Acute));
    std::printf("right proportion  0   = %.15g\n", region_proportion3(RegionKind::Right));
    std::printf("triangle area sqrt(3)/2*pi^2 = %.15g\n", region_area3(RegionKind::Total));
  }
  return 0;
}

int run_sample(Chart chart, std::uint64_t n, std::uint64_t seed,
               const CommonOpts& opts) {
  const ProportionReport report = estimate({chart, n, seed, opts.tol()});
  if (opts.json) {
    print_doc(report_json(report));
  } else {
    auto row = [](const char* label, const ClassStat& s) {
      std::printf("%-6s count=%llu fraction=%.15g exact=%.15g tolerance=%.15g %s\n",
                  label, static_cast<unsigned long long>(s.count), s.fraction,
                  s.exact, s.tolerance, s.pass ? "pass" : "FAIL");
    };
    std::printf("chart=%s n=%llu seed=%llu\n", name(report.chart).data(),
                static_cast<unsigned long long>(report.n),
                static_cast<unsigned long long>(report.seed));
    row("acute", report.acute);
    row("right", report.right);
    row("obtuse", report.obtuse);
  }
  return report.all_pass ? 0 : 1;
}

int run_plot(const RenderSpec& spec, const std::string& out_path) {
  write_svg(spec, out_path);
  return 0;
}

std::vector<double> parse_coords(const std::string& raw, size_t want) {
  std::vector<double> vals;
  std::string token;
  std::istringstream stream(raw);
  while (std::getline(stream, token, ',')) {
    try {
      size_t used = 0;
      vals.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      raise(ErrorCode::InvalidArguments, "bad overlay coordinate: " + token);
    }
  }
  if (vals.size() != want) {
    raise(ErrorCode::InvalidArguments,
          "overlay needs " + std::to_string(want) + " comma-separated values");
  }
  return vals;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Charts, classification and exact measures for triangle similarity classes"};
  app.require_subcommand(1);

  const std::map<std::string, Chart> chart_map{
      {"sideratio", Chart::SideRatio}, {"sigma", Chart::AngleSigma}};
  const std::map<std::string, Projection> projection_map{
      {"barycentric", Projection::Barycentric2D},
      {"oblique", Projection::Oblique3D}};

  // classify
  auto* classify = app.add_subcommand(
      "classify", "Classify a triangle given by sides or angles");
  std::vector<double> sides, angles_in;
  bool degrees = false;
  CommonOpts classify_opts;
  auto* sides_opt =
      classify->add_option("--sides", sides, "Three side lengths")->expected(3);
  auto* angles_opt =
      classify->add_option("--angles", angles_in, "Three interior angles")
          ->expected(3);
  classify->add_flag("--degrees", degrees, "Interpret --angles in degrees");
  add_common(classify, classify_opts);
  sides_opt->excludes(angles_opt);

  // measure
  auto* measure =
      app.add_subcommand("measure", "Exact areas and proportions of a chart");
  Chart measure_chart = Chart::SideRatio;
  CommonOpts measure_opts;
  measure->add_option("--chart", measure_chart, "Which chart")
      ->required()
      ->transform(CLI::CheckedTransformer(chart_map, CLI::ignore_case));
  add_common(measure, measure_opts);

  // sample
  auto* sample = app.add_subcommand(
      "sample", "Monte Carlo check of the class proportions");
  Chart sample_chart = Chart::AngleSigma;
  std::uint64_t sample_n = 1000000;
  std::uint64_t sample_seed = 1;
  CommonOpts sample_opts;
  sample->add_option("--chart", sample_chart, "Which chart")
      ->required()
      ->transform(CLI::CheckedTransformer(chart_map, CLI::ignore_case));
  sample->add_option("--n", sample_n, "Sample count")->check(CLI::PositiveNumber);
  auto* seed_opt = sample->add_option(
      "--seed", sample_seed, "RNG seed (falls back to TRIMODULI_SEED, then 1)");
  add_common(sample, sample_opts);

  // plot
  auto* plot = app.add_subcommand("plot", "Render a chart figure as SVG");
  Chart plot_chart = Chart::SideRatio;
  std::string out_path;
  int width = 800, height = 800;
  bool shade = false;
  Projection projection = Projection::Barycentric2D;
  std::vector<std::string> overlays;
  CommonOpts plot_opts;
  plot->add_option("--chart", plot_chart, "Which chart")
      ->required()
      ->transform(CLI::CheckedTransformer(chart_map, CLI::ignore_case));
  plot->add_option("--out", out_path, "Output SVG path")->required();
  plot->add_option("--width", width, "Figure width in px");
  plot->add_option("--height", height, "Figure height in px");
  plot->add_flag("--shade", shade, "Fill the acute/obtuse subregions");
  plot->add_option("--projection", projection,
                   "Plane chart projection (barycentric or oblique)")
      ->transform(CLI::CheckedTransformer(projection_map, CLI::ignore_case));
  plot->add_option("--overlay", overlays,
                   "Chart point to mark, as x,y or x,y,z (repeatable)");
  add_common(plot, plot_opts);

  bool json_for_errors = true;
  try {
    app.parse(argc, argv);

    if (classify->parsed()) {
      json_for_errors = classify_opts.json;
      if (sides.empty() == angles_in.empty()) {
        raise(ErrorCode::InvalidArguments,
              "exactly one of --sides or --angles is required");
      }
      return run_classify(sides, angles_in, degrees, classify_opts);
    }
    if (measure->parsed()) {
      json_for_errors = measure_opts.json;
      return run_measure(measure_chart, measure_opts);
    }
    if (sample->parsed()) {
      json_for_errors = sample_opts.json;
      return run_sample(sample_chart, sample_n,
                        resolve_seed(seed_opt, sample_seed), sample_opts);
    }
    if (plot->parsed()) {
      json_for_errors = plot_opts.json;
      RenderSpec spec;
      spec.chart = plot_chart;
      spec.width = width;
      spec.height = height;
      spec.shade_regions = shade;
      spec.projection = projection;
      for (const auto& raw : overlays) {
        if (plot_chart == Chart::SideRatio) {
          const auto v = parse_coords(raw, 2);
          spec.overlay2.push_back({v[0], v[1]});
        } else {
          // Markers keep the given coordinate order: permutations of one
          // class are distinct points of the plane chart. The sum gate is
          // looser than make_angles so values rounded for display still land.
          const auto v = parse_coords(raw, 3);
          for (const double w : v) {
            if (!std::isfinite(w) || w <= 0.0) {
              raise(ErrorCode::NonPositiveAngle,
                    "overlay angles must be positive");
            }
          }
          const double sum = v[0] + v[1] + v[2];
          if (!(std::abs(sum - kPi) <= 1e-3 * kPi)) {
            raise(ErrorCode::AngleSumMismatch,
                  "overlay angles must sum to pi (within 0.1%)");
          }
          const double scale = kPi / sum;
          spec.overlay3.push_back({v[0] * scale, v[1] * scale, v[2] * scale});
        }
      }
      return run_plot(spec, out_path);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cout << nlohmann::json{{"error",
                                 {{"code", "InvalidArguments"},
                                  {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    return 2;
  } catch (const trimoduli::Error& e) {
    if (json_for_errors) {
      std::cout << error_json(e).dump(2) << "\n";
    } else {
      std::fprintf(stderr, "error (%s): %s\n", name(e.code()).data(), e.what());
    }
    return 2;
  }
}
