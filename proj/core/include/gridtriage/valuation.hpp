#pragma once

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "gridtriage/network.hpp"

namespace gridtriage {

inline constexpr double kHoursPerYear = 8760.0;

// Criticality weight: 100 critical, 10 important, 1 ordinary.
int criticality_weight(LoadClass c) noexcept;

struct LoadValueFactor {
  int crt = 1;
  double voll = 1.0;

  static LoadValueFactor for_class(LoadClass c, double voll) noexcept {
    return LoadValueFactor{criticality_weight(c), voll};
  }
  double product() const noexcept { return crt * voll; }
};

// L * 8760 * LF * (CRT * voll). Dimensionless priority score.
double static_load_value(double load_kw, double load_factor, const LoadValueFactor& factor) noexcept;

// Static value weighted by the time the energizing line stays out.
double dynamic_load_value(double static_value, double repair_hours) noexcept;

// Own dynamic load value plus those of every line cut off when `id` opens.
// Descendants are summed in ascending id order. Throws UnknownLine, and
// InvalidValue when a required line has no entry in `dynamic_load_values`.
double dynamic_line_value(const RadialNetwork& net, const std::map<LineId, double>& dynamic_load_values,
                          LineId id);

enum class Tier { Red, Orange, Green };

std::string_view to_string(Tier t) noexcept;

struct RankedLine {
  int rank = 0;
  LineId line_id = 0;
  double value = 0.0;

  friend bool operator==(const RankedLine&, const RankedLine&) = default;
};

// Descending by value, ties by ascending line id, ranks from 1.
std::vector<RankedLine> rank_lines(const std::map<LineId, double>& line_values);

// First ceil(N/3) ranks red, next ceil((N - red)/2) orange, the rest green.
std::map<LineId, Tier> heatmap_tiers(std::span<const RankedLine> ranking);

struct LineValuation {
  LineId line_id = 0;
  double static_value = 0.0;
  double dynamic_load_value = 0.0;
  double dynamic_line_value = 0.0;
  int rank = 0;
  Tier tier = Tier::Green;
};

struct Valuation {
  std::vector<LineValuation> lines;  // ascending line id
  std::vector<RankedLine> ranking;
};

// Values, ranks and tiers every line given its repair duration in hours.
Valuation value_network(const RadialNetwork& net, const std::map<LineId, double>& repair_hours);

}  // namespace gridtriage
