#pragma once

#include <string>

#include <json.hpp>

#include "trimoduli/chart_angle.hpp"
#include "trimoduli/chart_sideratio.hpp"
#include "trimoduli/error.hpp"
#include "trimoduli/montecarlo.hpp"

namespace trimoduli {

inline nlohmann::json class_stat_json(const ClassStat& s) {
  return {{"count", s.count},
          {"fraction", s.fraction},
          {"exact", s.exact},
          {"tolerance", s.tolerance},
          {"pass", s.pass}};
}

inline nlohmann::json report_json(const ProportionReport& r) {
  return {{"chart", std::string(name(r.chart))},
          {"n", r.n},
          {"seed", r.seed},
          {"classes",
           {{"acute", class_stat_json(r.acute)},
            {"right", class_stat_json(r.right)},
            {"obtuse", class_stat_json(r.obtuse)}}},
          {"all_pass", r.all_pass}};
}

// Closed-form measures of each chart. Values are exact doubles; the labels
// carry the symbolic forms.
inline nlohmann::json measure_json(Chart chart) {
  auto entry = [](const char* label, double value) {
    return nlohmann::json{{"label", label}, {"value", value}};
  };
  if (chart == Chart::SideRatio) {
    const double total = region_area2(RegionKind::Total);
    return {{"chart", "sideratio"},
            {"areas",
             {{"total", entry("1/4", total)},
              {"acute", entry("(4-pi)/8", region_area2(RegionKind::Acute))},
              {"right", entry("0", region_area2(RegionKind::Right))},
              {"obtuse", entry("(pi-2)/8", region_area2(RegionKind::Obtuse))}}},
            {"fractions",
             {{"acute", entry("(4-pi)/2", region_area2(RegionKind::Acute) / total)},
              {"right", entry("0", 0.0)},
              {"obtuse",
               entry("(pi-2)/2", region_area2(RegionKind::Obtuse) / total)}}}};
  }
  return {{"chart", "sigma"},
          {"proportions",
           {{"acute", entry("1/4", region_proportion3(RegionKind::Acute))},
            {"right", entry("0", region_proportion3(RegionKind::Right))},
            {"obtuse", entry("3/4", region_proportion3(RegionKind::Obtuse))}}},
          {"areas",
           {{"total", entry("sqrt(3)/2*pi^2", region_area3(RegionKind::Total))},
            {"acute", entry("sqrt(3)/8*pi^2", region_area3(RegionKind::Acute))},
            {"right", entry("0", region_area3(RegionKind::Right))},
            {"obtuse",
             entry("3*sqrt(3)/8*pi^2", region_area3(RegionKind::Obtuse))}}}};
}

inline nlohmann::json shape_class_json(const ShapeClass& cls) {
  nlohmann::json legs;
  if (cls.leg_relation) legs = std::string(name(*cls.leg_relation));
  return {{"angle_kind", std::string(name(cls.angle_kind))},
          {"side_kind", std::string(name(cls.side_kind))},
          {"leg_relation", legs}};
}

inline nlohmann::json error_json(const Error& e) {
  return {{"error",
           {{"code", std::string(name(e.code()))}, {"message", e.what()}}}};
}

}  // namespace trimoduli
