#include "gridtriage/assessment.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <future>
#include <string>

namespace gridtriage {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view text, std::string_view where) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(Errc::ParseError, std::string(where) + ": expected a number, found '" +
                                      std::string(text) + "'");
  return v;
}

}  // namespace

void StormScenario::validate() const {
  if (!(wind_kmh >= 0.0) || !std::isfinite(wind_kmh))
    throw Error(Errc::InvalidValue, "wind speed must be a finite value >= 0 km/h");
  if (!(avg_repair_hours > 0.0) || !std::isfinite(avg_repair_hours))
    throw Error(Errc::NonpositiveAverage, "average repair time must be > 0 hours");
  if (q_precision > 12) throw Error(Errc::InvalidValue, "q_precision must be <= 12");
  for (const auto& [line, v] : line_wind_kmh)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw Error(Errc::InvalidValue, "line " + std::to_string(line) + " wind speed must be >= 0", {line});
}

StormScenario parse_scenario(std::string_view text, std::string_view source, StormScenario base) {
  StormScenario s = std::move(base);
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(Errc::ParseError, where + ": expected key=value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "wind_kmh") {
      s.wind_kmh = parse_number<double>(value, where);
    } else if (key == "avg_repair_hours") {
      s.avg_repair_hours = parse_number<double>(value, where);
    } else if (key == "q_precision") {
      s.q_precision = parse_number<int>(value, where);
    } else if (key == "rounding") {
      const auto r = parse_count_rounding(value);
      if (!r) throw Error(Errc::SchemaError, where + ": rounding must be 'nearest' or 'ceil'");
      s.rounding = *r;
    } else if (key.starts_with("line_wind_kmh.")) {
      const auto id = parse_number<int>(key.substr(14), where);
      s.line_wind_kmh[id] = parse_number<double>(value, where);
    } else {
      throw Error(Errc::SchemaError, where + ": unknown key '" + std::string(key) + "'");
    }
  }
  s.validate();
  return s;
}

AssessmentReport run_assessment(const Dataset& data, const StormScenario& scenario,
                                std::optional<std::vector<BusId>> targets) {
  scenario.validate();
  const auto& net = data.network;
  for (const auto& [line, _] : scenario.line_wind_kmh)
    if (!net.has_line(line))
      throw Error(Errc::UnknownLine, "wind override for undefined line " + std::to_string(line), {line});

  AssessmentReport report;
  report.scenario = scenario;
  report.classes = class_damage_counts(data.fragility, scenario.wind_kmh, scenario.rounding);

  std::map<LineId, LineDamage> damage;
  std::map<LineId, double> hours;
  for (const Line& l : net.lines()) {
    const auto wind = scenario.line_wind_kmh.contains(l.id) ? scenario.line_wind_kmh.at(l.id)
                                                             : scenario.wind_kmh;
    auto d = assess_line(data.inventories.at(l.id), data.fragility, wind, scenario.avg_repair_hours,
                         scenario.q_precision);
    hours.emplace(l.id, d.repair_hours);
    damage.emplace(l.id, std::move(d));
  }

  Valuation valuation = value_network(net, hours);
  report.ranking = valuation.ranking;
  for (const auto& v : valuation.lines) {
    const Line& l = net.line(v.line_id);
    const auto& d = damage.at(v.line_id);
    report.lines.push_back(LineReport{l.id, l.from_bus, l.to_bus, data.inventories.at(l.id).total(), d.bt,
                                      d.repair_hours, v.static_value, v.dynamic_load_value,
                                      v.dynamic_line_value, v.rank, v.tier,
                                      net.bus(l.to_bus).location_tag});
  }

  if (targets) {
    report.targets = *targets;
    report.crew = build_crew_plan(net, report.ranking, damage, *targets);
  }

  report.warnings = data.warnings;
  report.warnings.push_back(Warning{
      "N-UPSTREAM-DOMINANCE",
      "line values include every downstream dynamic load value, so a line never ranks below a line it feeds; an external priority list that puts a fed line first cannot come from these values"});
  return report;
}

std::vector<SweepRow> wind_sweep(const FragilitySet& fragility, std::span<const double> speeds,
                                 CountRounding rounding) {
  if (speeds.empty()) throw Error(Errc::EmptySweep, "no wind speeds to evaluate");
  for (double v : speeds)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw Error(Errc::InvalidValue, "sweep speeds must be finite and >= 0 km/h");

  // Rows are independent; evaluate in a few chunks and merge in input order.
  constexpr std::size_t kChunk = 64;
  std::vector<SweepRow> rows(speeds.size());
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      rows[i] = SweepRow{speeds[i], class_damage_counts(fragility, speeds[i], rounding)};
  };
  if (speeds.size() <= kChunk) {
    fill(0, speeds.size());
    return rows;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t b = 0; b < speeds.size(); b += kChunk)
    jobs.push_back(std::async(std::launch::async, fill, b, std::min(speeds.size(), b + kChunk)));
  for (auto& j : jobs) j.get();
  return rows;
}

std::vector<double> speed_range(double from, double to, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw Error(Errc::InvalidValue, "sweep step must be > 0");
  if (!std::isfinite(from) || !std::isfinite(to)) throw Error(Errc::InvalidValue, "sweep bounds must be finite");
  std::vector<double> speeds;
  // Index-based so the grid does not drift; tolerance keeps `to` inclusive.
  const double span = (to - from) / step;
  if (span >= -1e-9) {
    const auto n = static_cast<long long>(std::floor(span + 1e-9));
    for (long long i = 0; i <= n; ++i) {
      const double v = from + static_cast<double>(i) * step;
      if (v >= 0.0) speeds.push_back(v);
    }
  }
  if (speeds.empty())
    throw Error(Errc::EmptySweep, "sweep range has no speeds at or above 0 km/h");
  return speeds;
}

}  // namespace gridtriage
