#include "gridtriage/report.hpp"

#include <cstdio>
#include <sstream>

#include "gridtriage/csv.hpp"
#include "json.hpp"

namespace gridtriage {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kValueUnit = 1e13;

std::string printf_str(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string sci(double v) { return printf_str("%.6e", v); }
double e13(double v) { return round_half_up(v / kValueUnit, 4); }

// Shortest double that prints as the 4-decimal rounding of v.
double round4(double v) { return round_half_up(v, 4); }

ojson scenario_json(const StormScenario& s) {
  ojson j{{"wind_kmh", s.wind_kmh},
          {"avg_repair_hours", s.avg_repair_hours},
          {"q_precision", s.q_precision},
          {"rounding", to_string(s.rounding)}};
  if (!s.line_wind_kmh.empty()) {
    ojson o = ojson::object();
    for (const auto& [line, v] : s.line_wind_kmh) o[std::to_string(line)] = v;
    j["line_wind_kmh"] = o;
  }
  return j;
}

ojson warnings_json(std::span<const Warning> ws) {
  ojson a = ojson::array();
  for (const auto& w : ws) a.push_back({{"code", w.code}, {"message", w.message}});
  return a;
}

ojson classes_json(std::span<const ClassDamage> cs) {
  ojson a = ojson::array();
  for (const auto& c : cs)
    a.push_back({{"class_id", c.class_id}, {"q", round4(c.q)}, {"damaged_count", c.damaged_count}});
  return a;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

void table_warnings(std::ostringstream& out, std::span<const Warning> ws) {
  if (ws.empty()) return;
  out << "\nnotes:\n";
  for (const auto& w : ws) out << "  " << w.code << ": " << w.message << "\n";
}

const LineReport& line_of(const AssessmentReport& r, LineId id) {
  for (const auto& l : r.lines)
    if (l.line_id == id) return l;
  throw Error(Errc::UnknownLine, "line " + std::to_string(id) + " missing from report", {id});
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  if (text == "table") return ReportFormat::Table;
  return std::nullopt;
}

std::string fixed4(double value) { return printf_str("%.4f", value); }

std::string render_validation(const Dataset& data, ReportFormat format) {
  const auto& net = data.network;
  if (format == ReportFormat::Json) {
    ojson classes = ojson::array();
    for (const auto& c : data.fragility.classes())
      classes.push_back({{"class_id", c.class_id}, {"count", c.count}});
    return dump(ojson{{"valid", true},
                      {"buses", net.buses().size()},
                      {"lines", net.line_count()},
                      {"root", net.root()},
                      {"classes", classes},
                      {"total_poles", data.total_poles()},
                      {"warnings", warnings_json(data.warnings)}});
  }
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    out << "field,value\n"
        << "buses," << net.buses().size() << "\n"
        << "lines," << net.line_count() << "\n"
        << "root," << net.root() << "\n"
        << "classes," << data.fragility.size() << "\n"
        << "total_poles," << data.total_poles() << "\n"
        << "warnings," << data.warnings.size() << "\n";
    return out.str();
  }
  out << "dataset valid\n"
      << "  buses:       " << net.buses().size() << "\n"
      << "  lines:       " << net.line_count() << "\n"
      << "  root:        " << net.root() << (net.has_synthetic_source() ? " (source node)" : "") << "\n"
      << "  classes:     " << data.fragility.size() << "\n"
      << "  total poles: " << data.total_poles() << "\n";
  table_warnings(out, data.warnings);
  return out.str();
}

std::string render_damage(const AssessmentReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ojson lines = ojson::array();
    for (const auto& l : r.lines) {
      ojson rec{{"line_id", l.line_id},
                {"poles", l.pole_total},
                {"bt", round4(l.bt)},
                {"repair_hours", round4(l.repair_hours)}};
      if (l.location_tag) rec["location_tag"] = *l.location_tag;
      lines.push_back(std::move(rec));
    }
    return dump(ojson{{"scenario", scenario_json(r.scenario)},
                      {"classes", classes_json(r.classes)},
                      {"lines", lines},
                      {"warnings", warnings_json(r.warnings)}});
  }
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    out << "line_id,poles,bt,repair_hours\n";
    for (const auto& l : r.lines)
      out << l.line_id << ',' << l.pole_total << ',' << fixed4(l.bt) << ',' << fixed4(l.repair_hours)
          << '\n';
    return out.str();
  }
  out << "wind " << fixed4(r.scenario.wind_kmh) << " km/h, " << fixed4(r.scenario.avg_repair_hours)
      << " h per pole\n\nclass        q   damaged\n";
  for (const auto& c : r.classes)
    out << pad(std::to_string(c.class_id), 5) << pad(fixed4(round_half_up(c.q, 4)), 9) << pad(std::to_string(c.damaged_count), 10)
        << "\n";
  out << "\n line  poles       bt    t_rep(h)\n";
  for (const auto& l : r.lines)
    out << pad(std::to_string(l.line_id), 5) << pad(std::to_string(l.pole_total), 7) << pad(fixed4(l.bt), 9)
        << pad(fixed4(l.repair_hours), 12) << "\n";
  table_warnings(out, r.warnings);
  return out.str();
}

std::string render_ranking(const AssessmentReport& r, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ojson rows = ojson::array();
    for (const auto& rk : r.ranking) {
      const auto& l = line_of(r, rk.line_id);
      ojson rec{{"rank", rk.rank},
                {"line_id", l.line_id},
                {"tier", to_string(l.tier)},
                {"bt", round4(l.bt)},
                {"repair_hours", round4(l.repair_hours)},
                {"static_value", l.static_value},
                {"dynamic_load_value", l.dynamic_load_value},
                {"dynamic_line_value", l.dynamic_line_value},
                {"value_e13", e13(l.dynamic_line_value)}};
      if (l.location_tag) rec["location_tag"] = *l.location_tag;
      rows.push_back(std::move(rec));
    }
    return dump(ojson{{"scenario", scenario_json(r.scenario)},
                      {"ranking", rows},
                      {"warnings", warnings_json(r.warnings)}});
  }
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    out << "rank,line_id,tier,bt,repair_hours,static_value,dynamic_load_value,dynamic_line_value,value_e13\n";
    for (const auto& rk : r.ranking) {
      const auto& l = line_of(r, rk.line_id);
      out << rk.rank << ',' << l.line_id << ',' << to_string(l.tier) << ',' << fixed4(l.bt) << ','
          << fixed4(l.repair_hours) << ',' << sci(l.static_value) << ',' << sci(l.dynamic_load_value) << ','
          << sci(l.dynamic_line_value) << ',' << fixed4(e13(l.dynamic_line_value)) << '\n';
    }
    return out.str();
  }
  out << "wind " << fixed4(r.scenario.wind_kmh) << " km/h\n\n"
      << " rank  line  tier        bt   t_rep(h)   value(x1e13)\n";
  for (const auto& rk : r.ranking) {
    const auto& l = line_of(r, rk.line_id);
    std::string tier(to_string(l.tier));
    tier.resize(7, ' ');
    out << pad(std::to_string(rk.rank), 5) << pad(std::to_string(l.line_id), 6) << "  " << tier
        << pad(fixed4(l.bt), 9) << pad(fixed4(l.repair_hours), 11) << pad(fixed4(e13(l.dynamic_line_value)), 15)
        << "\n";
  }
  table_warnings(out, r.warnings);
  return out.str();
}

std::string render_plan(const AssessmentReport& r, ReportFormat format) {
  if (!r.crew) throw Error(Errc::InvalidValue, "report has no crew plan; give target buses");
  const CrewPlan& plan = *r.crew;
  if (format == ReportFormat::Json) {
    ojson entries = ojson::array();
    for (const auto& e : plan.entries)
      entries.push_back({{"line_id", e.line_id}, {"bt", round4(e.bt)}, {"teams", e.teams}});
    return dump(ojson{{"scenario", scenario_json(r.scenario)},
                      {"targets", r.targets},
                      {"entries", entries},
                      {"total_teams", plan.total_teams},
                      {"warnings", warnings_json(r.warnings)}});
  }
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    out << "line_id,bt,teams\n";
    for (const auto& e : plan.entries) out << e.line_id << ',' << fixed4(e.bt) << ',' << e.teams << '\n';
    out << "total,," << plan.total_teams << '\n';
    return out.str();
  }
  out << "wind " << fixed4(r.scenario.wind_kmh) << " km/h, targets";
  for (BusId t : r.targets) out << ' ' << t;
  out << "\n\n line       bt  teams\n";
  for (const auto& e : plan.entries)
    out << pad(std::to_string(e.line_id), 5) << pad(fixed4(e.bt), 9) << pad(std::to_string(e.teams), 7) << "\n";
  out << "total teams: " << plan.total_teams << "\n";
  table_warnings(out, r.warnings);
  return out.str();
}

std::string render_sweep(std::span<const SweepRow> rows, ReportFormat format) {
  if (format == ReportFormat::Json) {
    ojson a = ojson::array();
    for (const auto& row : rows) a.push_back({{"wind_kmh", row.wind_kmh}, {"classes", classes_json(row.classes)}});
    return dump(ojson{{"sweep", a}});
  }
  std::ostringstream out;
  const bool csv = format == ReportFormat::Csv;
  out << (csv ? "wind_kmh" : "  wind_kmh");
  if (!rows.empty())
    for (const auto& c : rows.front().classes)
      out << (csv ? "," : "  ") << (csv ? "" : " ") << "class_" << c.class_id;
  out << (csv ? ",total\n" : "    total\n");
  for (const auto& row : rows) {
    int total = 0;
    out << (csv ? csv::format_real(row.wind_kmh) : pad(fixed4(row.wind_kmh), 10));
    for (const auto& c : row.classes) {
      total += c.damaged_count;
      out << (csv ? "," + std::to_string(c.damaged_count) : pad(std::to_string(c.damaged_count), 10));
    }
    out << (csv ? "," + std::to_string(total) : pad(std::to_string(total), 9)) << "\n";
  }
  return out.str();
}

}  // namespace gridtriage
