#include "gridtriage/valuation.hpp"

#include <algorithm>
#include <string>

#include "gridtriage/errors.hpp"

namespace gridtriage {

int criticality_weight(LoadClass c) noexcept {
  switch (c) {
    case LoadClass::Critical: return 100;
    case LoadClass::Important: return 10;
    case LoadClass::Ordinary: return 1;
  }
  return 1;
}

double static_load_value(double load_kw, double load_factor, const LoadValueFactor& factor) noexcept {
  return load_kw * kHoursPerYear * load_factor * factor.product();
}

double dynamic_load_value(double static_value, double repair_hours) noexcept {
  return static_value * repair_hours;
}

namespace {

double lookup(const std::map<LineId, double>& values, LineId id) {
  auto it = values.find(id);
  if (it == values.end())
    throw Error(Errc::InvalidValue, "line " + std::to_string(id) + " has no dynamic load value", {id});
  return it->second;
}

// Deepest lines first, so each line adds its children's finished totals.
// Summing non-negative subtotals keeps every parent at or above each child
// in floating point, not only in exact arithmetic.
std::map<LineId, double> accumulate_line_values(const RadialNetwork& net, std::vector<LineId> ids,
                                                const std::map<LineId, double>& dynamic_load_values) {
  std::stable_sort(ids.begin(), ids.end(), [&](LineId a, LineId b) { return net.depth(a) > net.depth(b); });
  std::map<LineId, double> totals;
  for (LineId id : ids) {
    double sum = lookup(dynamic_load_values, id);
    auto children = net.child_lines(id);
    std::sort(children.begin(), children.end());
    for (LineId c : children) sum += totals.at(c);
    totals.emplace(id, sum);
  }
  return totals;
}

}  // namespace

double dynamic_line_value(const RadialNetwork& net, const std::map<LineId, double>& dynamic_load_values,
                          LineId id) {
  auto ids = net.descendants(id);
  ids.push_back(id);
  return accumulate_line_values(net, std::move(ids), dynamic_load_values).at(id);
}

std::string_view to_string(Tier t) noexcept {
  switch (t) {
    case Tier::Red: return "red";
    case Tier::Orange: return "orange";
    case Tier::Green: return "green";
  }
  return "green";
}

std::vector<RankedLine> rank_lines(const std::map<LineId, double>& line_values) {
  std::vector<RankedLine> out;
  out.reserve(line_values.size());
  for (const auto& [id, v] : line_values) out.push_back(RankedLine{0, id, v});
  std::stable_sort(out.begin(), out.end(), [](const RankedLine& a, const RankedLine& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.line_id < b.line_id;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].rank = static_cast<int>(i) + 1;
  return out;
}

std::map<LineId, Tier> heatmap_tiers(std::span<const RankedLine> ranking) {
  const std::size_t n = ranking.size();
  const std::size_t red = (n + 2) / 3;
  const std::size_t orange = (n - red + 1) / 2;
  std::map<LineId, Tier> tiers;
  for (const auto& r : ranking) {
    const auto pos = static_cast<std::size_t>(r.rank);
    tiers[r.line_id] = pos <= red ? Tier::Red : pos <= red + orange ? Tier::Orange : Tier::Green;
  }
  return tiers;
}

Valuation value_network(const RadialNetwork& net, const std::map<LineId, double>& repair_hours) {
  Valuation out;
  std::map<LineId, double> dyn;
  for (const Line& l : net.lines()) {
    const Bus& b = net.bus(l.to_bus);
    LineValuation v;
    v.line_id = l.id;
    v.static_value = static_load_value(b.load_kw, l.load_factor,
                                       LoadValueFactor::for_class(b.load_class, l.voll));
    v.dynamic_load_value = dynamic_load_value(v.static_value, lookup(repair_hours, l.id));
    dyn.emplace(l.id, v.dynamic_load_value);
    out.lines.push_back(v);
  }
  std::vector<LineId> ids;
  for (const auto& v : out.lines) ids.push_back(v.line_id);
  const auto line_values = accumulate_line_values(net, std::move(ids), dyn);
  for (auto& v : out.lines) v.dynamic_line_value = line_values.at(v.line_id);
  out.ranking = rank_lines(line_values);
  const auto tiers = heatmap_tiers(out.ranking);
  std::map<LineId, int> rank_of;
  for (const auto& r : out.ranking) rank_of.emplace(r.line_id, r.rank);
  for (auto& v : out.lines) {
    v.rank = rank_of.at(v.line_id);
    v.tier = tiers.at(v.line_id);
  }
  return out;
}

}  // namespace gridtriage
