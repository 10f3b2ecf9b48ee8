#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "run_cli.hpp"
#include "trimoduli/montecarlo.hpp"

using nlohmann::json;

TEST_CASE("classify from sides: 3-4-5") {
  const auto r = cli::run("classify --sides 3 4 5");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["class"]["angle_kind"] == "right");
  CHECK(doc["class"]["side_kind"] == "scalene");
  CHECK(doc["class"]["leg_relation"].is_null());
  CHECK(doc["canonical_sides"][0].get<double>() == 0.6);
  CHECK(doc["canonical_sides"][1].get<double>() == 0.8);
  CHECK(doc["canonical_sides"][2].get<double>() == 1.0);
  CHECK(doc["chart2"]["locus"] == "ArcBD");
  CHECK(doc["chart2"]["x"].get<double>() == 0.6);
  CHECK(doc["chart3"]["locus"] == "EdgePQ");
  CHECK(std::abs(doc["chart3"]["point"][2].get<double>() -
                 trimoduli::kHalfPi) < 1e-12);

  // The document is canonical: reparsing and redumping reproduces it.
  CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
}

TEST_CASE("classify an equilateral triangle") {
  const auto r = cli::run("classify --sides 7 7 7");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["class"]["side_kind"] == "equilateral");
  CHECK(doc["chart2"]["locus"] == "PointC");
  CHECK(doc["chart3"]["locus"] == "Centroid");
}

TEST_CASE("classify from angles in degrees") {
  const auto r = cli::run("classify --angles 60 60 60 --degrees");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["class"]["side_kind"] == "equilateral");
  CHECK(doc["input"]["mode"] == "angles-degrees");

  const auto r2 = cli::run("classify --angles 45 45 90 --degrees");
  const json doc2 = json::parse(r2.out);
  CHECK(doc2["class"]["angle_kind"] == "right");
  CHECK(doc2["class"]["leg_relation"] == "legs_shorter");
  CHECK(doc2["chart2"]["locus"] == "PointD");
  CHECK(doc2["chart3"]["locus"] == "PointPrime");
}

TEST_CASE("classify errors use exit code 2 and a machine-readable body") {
  const auto degen = cli::run("classify --sides 1 1 2");
  CHECK(degen.exit_code == 2);
  CHECK(json::parse(degen.out)["error"]["code"] == "DegenerateTriangle");

  const auto nonpos = cli::run("classify --sides 0 1 1");
  CHECK(nonpos.exit_code == 2);
  CHECK(json::parse(nonpos.out)["error"]["code"] == "NonPositiveSide");

  const auto badsum = cli::run("classify --angles 1 1 1");
  CHECK(badsum.exit_code == 2);
  CHECK(json::parse(badsum.out)["error"]["code"] == "AngleSumMismatch");

  const auto both = cli::run("classify --sides 3 4 5 --angles 1 1 1");
  CHECK(both.exit_code == 2);

  const auto neither = cli::run("classify");
  CHECK(neither.exit_code == 2);
  CHECK(json::parse(neither.out)["error"]["code"] == "InvalidArguments");
}

TEST_CASE("measure emits the exact constants") {
  const auto r = cli::run("measure --chart sideratio");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["areas"]["obtuse"]["value"].get<double>() ==
        (trimoduli::kPi - 2.0) / 8.0);
  CHECK(doc["areas"]["total"]["value"].get<double>() == 0.25);

  const auto r2 = cli::run("measure --chart sigma");
  const json doc2 = json::parse(r2.out);
  CHECK(doc2["proportions"]["obtuse"]["value"].get<double>() == 0.75);
  CHECK(doc2["proportions"]["acute"]["value"].get<double>() == 0.25);
}

TEST_CASE("sample passes statistics checks and reports counts") {
  const auto r = cli::run("sample --chart sigma --n 20000 --seed 1");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["all_pass"] == true);
  CHECK(doc["n"] == 20000);
  CHECK(doc["seed"] == 1);
  const auto classes = doc["classes"];
  CHECK(classes["acute"]["count"].get<std::uint64_t>() +
            classes["right"]["count"].get<std::uint64_t>() +
            classes["obtuse"]["count"].get<std::uint64_t>() ==
        20000);
}

TEST_CASE("sample output is byte-identical for identical flags") {
  const std::string flags = "sample --chart sideratio --n 50000 --seed 9";
  const auto a = cli::run(flags);
  const auto b = cli::run(flags);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("seed falls back to TRIMODULI_SEED, then 1") {
  const auto env_run =
      cli::run("sample --chart sigma --n 10000", "TRIMODULI_SEED=5");
  const auto flag_run = cli::run("sample --chart sigma --n 10000 --seed 5");
  CHECK(env_run.out == flag_run.out);

  const auto default_run = cli::run("sample --chart sigma --n 10000");
  const auto seed1_run = cli::run("sample --chart sigma --n 10000 --seed 1");
  CHECK(default_run.out == seed1_run.out);

  const auto flag_wins =
      cli::run("sample --chart sigma --n 10000 --seed 5", "TRIMODULI_SEED=11");
  CHECK(flag_wins.out == flag_run.out);

  const auto bad_env =
      cli::run("sample --chart sigma --n 10000", "TRIMODULI_SEED=banana");
  CHECK(bad_env.exit_code == 2);
}

TEST_CASE("a statistically failing run exits with code 1") {
  // Scan small-n plans for a seed whose draw legitimately misses the 3-sigma
  // band (all-acute or all-obtuse quadruples do). Deterministic: the scan
  // depends only on the pinned generator.
  std::uint64_t failing_seed = 0;
  for (std::uint64_t seed = 1; seed <= 4000; ++seed) {
    const auto report = trimoduli::estimate({trimoduli::Chart::AngleSigma, 4, seed});
    if (!report.all_pass) {
      failing_seed = seed;
      break;
    }
  }
  REQUIRE(failing_seed != 0);
  const auto r = cli::run("sample --chart sigma --n 4 --seed " +
                          std::to_string(failing_seed));
  CHECK(r.exit_code == 1);
  CHECK(json::parse(r.out)["all_pass"] == false);
}

TEST_CASE("plot writes identical files across runs and rejects bad specs") {
  const std::string out1 = "cli_fig1_a.svg";
  const std::string out2 = "cli_fig1_b.svg";
  const std::string flags = "plot --chart sideratio --shade --out ";
  CHECK(cli::run(flags + out1).exit_code == 0);
  CHECK(cli::run(flags + out2).exit_code == 0);
  const std::string a = cli::slurp(out1);
  const std::string b = cli::slurp(out2);
  REQUIRE_FALSE(a.empty());
  CHECK(a == b);
  std::remove(out1.c_str());
  std::remove(out2.c_str());

  const auto bad = cli::run("plot --chart sideratio --width 5 --out tiny.svg");
  CHECK(bad.exit_code == 2);
  CHECK(json::parse(bad.out)["error"]["code"] == "InvalidSpec");

  const auto noperm = cli::run(
      "plot --chart sigma --out /nonexistent-dir/fig.svg");
  CHECK(noperm.exit_code == 2);
  CHECK(json::parse(noperm.out)["error"]["code"] == "IoError");
}

TEST_CASE("plot accepts overlays and projections") {
  const std::string out = "cli_fig2.svg";
  const auto r = cli::run(
      "plot --chart sigma --projection oblique "
      "--overlay 1.0471975511965976,1.0471975511965976,1.0471975511965979 --out " +
      out);
  CHECK(r.exit_code == 0);
  const std::string svg = cli::slurp(out);
  CHECK(svg.find("class=\"overlay\"") != std::string::npos);
  CHECK(svg.find("data-projection=\"oblique\"") != std::string::npos);
  std::remove(out.c_str());

  const auto bad = cli::run("plot --chart sigma --overlay 1,2 --out x.svg");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("overlays tolerate display rounding and keep coordinate order") {
  // Angles rounded to four decimals, as the tools themselves print them.
  const auto rounded = cli::run(
      "plot --chart sigma --overlay 1.0472,1.0472,1.0472 --out cli_ov_r.svg");
  CHECK(rounded.exit_code == 0);
  std::remove("cli_ov_r.svg");

  const auto off = cli::run("plot --chart sigma --overlay 1,1,1 --out x.svg");
  CHECK(off.exit_code == 2);
  CHECK(json::parse(off.out)["error"]["code"] == "AngleSumMismatch");

  // Permutations of one class are different points of the plane, so the
  // marker must not be re-sorted under the user.
  const auto p1 = cli::run(
      "plot --chart sigma --overlay 1.5708,0.7854,0.7854 --out cli_ov_a.svg");
  const auto p2 = cli::run(
      "plot --chart sigma --overlay 0.7854,0.7854,1.5708 --out cli_ov_b.svg");
  CHECK(p1.exit_code == 0);
  CHECK(p2.exit_code == 0);
  const std::string a = cli::slurp("cli_ov_a.svg");
  const std::string b = cli::slurp("cli_ov_b.svg");
  CHECK(!a.empty());
  CHECK(a != b);
  std::remove("cli_ov_a.svg");
  std::remove("cli_ov_b.svg");
}

TEST_CASE("help exits cleanly") {
  CHECK(cli::run("--help").exit_code == 0);
  CHECK(cli::run("classify --help").exit_code == 0);
}

TEST_CASE("unknown flags are invalid input") {
  const auto r = cli::run("classify --sides 3 4 5 --frobnicate");
  CHECK(r.exit_code == 2);
  CHECK(json::parse(r.out)["error"]["code"] == "InvalidArguments");
}

TEST_CASE("plain-text mode prints human-readable lines") {
  const auto r = cli::run("classify --sides 3 4 5 --no-json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("right scalene") != std::string::npos);
  CHECK(r.out.find("ArcBD") != std::string::npos);
}
