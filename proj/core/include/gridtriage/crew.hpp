#pragma once

#include <map>
#include <span>
#include <vector>

#include "gridtriage/damage.hpp"
#include "gridtriage/network.hpp"
#include "gridtriage/valuation.hpp"

namespace gridtriage {

struct CrewEntry {
  LineId line_id = 0;
  double bt = 0.0;
  int teams = 0;

  friend bool operator==(const CrewEntry&, const CrewEntry&) = default;
};

struct CrewPlan {
  std::vector<CrewEntry> entries;  // restoration order
  int total_teams = 0;
};

// Union of source paths to every target bus, ordered by ranking (rank 1
// first). Throws UnknownBus, or InvalidValue if a needed line is unranked.
std::vector<LineId> restoration_set(const RadialNetwork& net, std::span<const RankedLine> ranking,
                                    std::span<const BusId> targets);

// ceil(bt); a whole number of damaged poles needs exactly that many teams.
int teams_for_line(double bt);

// Teams per line over the restoration set. Crews stage at the slack bus with
// no travel time.
CrewPlan build_crew_plan(const RadialNetwork& net, std::span<const RankedLine> ranking,
                         const std::map<LineId, LineDamage>& damage, std::span<const BusId> targets);

}  // namespace gridtriage
