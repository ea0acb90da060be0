#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridtriage/crew.hpp"
#include "gridtriage/damage.hpp"
#include "gridtriage/dataset.hpp"
#include "gridtriage/fragility.hpp"
#include "gridtriage/valuation.hpp"

namespace gridtriage {

struct StormScenario {
  double wind_kmh = 0.0;          // sustained speed, uniform over the network
  double avg_repair_hours = 4.0;  // per damaged pole
  int q_precision = kDefaultProbabilityPrecision;
  CountRounding rounding = CountRounding::Nearest;
  // Optional per-line speed; lines not listed use wind_kmh.
  std::map<LineId, double> line_wind_kmh;

  void validate() const;  // throws InvalidValue / NonpositiveAverage
};

// Flat `key = value` text; '#' starts a comment. Keys: wind_kmh,
// avg_repair_hours, q_precision, rounding (nearest|ceil), and
// line_wind_kmh.<line id>. Unset keys keep the values of `base`.
StormScenario parse_scenario(std::string_view text, std::string_view source,
                             StormScenario base = {});

struct LineReport {
  LineId line_id = 0;
  BusId from_bus = 0;
  BusId to_bus = 0;
  int pole_total = 0;
  double bt = 0.0;
  double repair_hours = 0.0;
  double static_value = 0.0;
  double dynamic_load_value = 0.0;
  double dynamic_line_value = 0.0;
  int rank = 0;
  Tier tier = Tier::Green;
  std::optional<std::string> location_tag;
};

struct AssessmentReport {
  StormScenario scenario;
  std::vector<ClassDamage> classes;
  std::vector<LineReport> lines;  // ascending line id, each line once
  std::vector<RankedLine> ranking;
  std::vector<BusId> targets;
  std::optional<CrewPlan> crew;
  std::vector<Warning> warnings;
};

// fragility -> per-line damage -> valuation -> ranking -> tiers -> crews
// (when targets are given). Throws instead of returning partial output.
AssessmentReport run_assessment(const Dataset& data, const StormScenario& scenario,
                                std::optional<std::vector<BusId>> targets = std::nullopt);

struct SweepRow {
  double wind_kmh = 0.0;
  std::vector<ClassDamage> classes;
};

// One row per speed, in input order. Throws EmptySweep on an empty list and
// InvalidValue on a negative speed.
std::vector<SweepRow> wind_sweep(const FragilitySet& fragility, std::span<const double> speeds,
                                 CountRounding rounding = CountRounding::Nearest);

// from, from+step, ... up to `to` inclusive, clipped to [0, inf). Throws
// InvalidValue for step <= 0 and EmptySweep when nothing is left.
std::vector<double> speed_range(double from, double to, double step);

}  // namespace gridtriage
