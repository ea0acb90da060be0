#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gridtriage/fragility.hpp"
#include "gridtriage/network.hpp"

namespace gridtriage {

// Poles of one line, counted per lifetime class.
struct LinePoleInventory {
  LineId line_id = 0;
  std::map<ClassId, int> per_class_counts;

  int total() const noexcept;

  friend bool operator==(const LinePoleInventory&, const LinePoleInventory&) = default;
};

struct LineDamage {
  LineId line_id = 0;
  double bt = 0.0;            // expected damaged poles, fractional
  double repair_hours = 0.0;
  std::optional<std::vector<double>> per_pole_hours;
};

// Σ_i q_i(v_real) * n_{line,i}, with q_i rounded to `precision` decimals
// (negative disables rounding). Fractional result. Throws UnknownClass.
double line_damaged_poles(const LinePoleInventory& inv, const FragilitySet& fragility,
                          double v_real, int precision = kDefaultProbabilityPrecision);

// bt * average per-pole repair time. Throws NonpositiveAverage.
double line_repair_time(double bt, double avg_repair_hours);

// Sum of individual pole repair durations. Throws NegativeDuration.
double line_repair_time_itemized(std::span<const double> per_pole_hours);

LineDamage assess_line(const LinePoleInventory& inv, const FragilitySet& fragility, double v_real,
                       double avg_repair_hours, int precision = kDefaultProbabilityPrecision);

}  // namespace gridtriage
