#include "gridtriage/crew.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "gridtriage/errors.hpp"

namespace gridtriage {

std::vector<LineId> restoration_set(const RadialNetwork& net, std::span<const RankedLine> ranking,
                                    std::span<const BusId> targets) {
  std::set<LineId> needed;
  for (BusId t : targets) {
    if (!net.has_bus(t) && t != net.root())
      throw Error(Errc::UnknownBus, "target bus " + std::to_string(t) + " does not exist", {t});
    for (LineId l : net.path_from_source(t)) needed.insert(l);
  }
  std::vector<LineId> ordered;
  ordered.reserve(needed.size());
  for (const auto& r : ranking)
    if (needed.contains(r.line_id)) ordered.push_back(r.line_id);
  if (ordered.size() != needed.size()) {
    for (LineId l : needed)
      if (std::find(ordered.begin(), ordered.end(), l) == ordered.end())
        throw Error(Errc::InvalidValue, "line " + std::to_string(l) + " missing from ranking", {l});
  }
  return ordered;
}

int teams_for_line(double bt) {
  if (!(bt >= 0.0)) throw Error(Errc::InvalidValue, "damaged pole count must be >= 0");
  return static_cast<int>(ceil_tolerant(bt));
}

CrewPlan build_crew_plan(const RadialNetwork& net, std::span<const RankedLine> ranking,
                         const std::map<LineId, LineDamage>& damage, std::span<const BusId> targets) {
  CrewPlan plan;
  for (LineId l : restoration_set(net, ranking, targets)) {
    auto it = damage.find(l);
    if (it == damage.end())
      throw Error(Errc::InvalidValue, "line " + std::to_string(l) + " has no damage estimate", {l});
    const int teams = teams_for_line(it->second.bt);
    plan.entries.push_back(CrewEntry{l, it->second.bt, teams});
    plan.total_teams += teams;
  }
  return plan;
}

}  // namespace gridtriage
