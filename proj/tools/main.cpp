#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridtriage/assessment.hpp"
#include "gridtriage/dataset.hpp"
#include "gridtriage/report.hpp"

namespace {

using namespace gridtriage;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;

struct Options {
  std::string dataset = "ieee33";
  std::string dir;
  std::optional<int> root;
  std::string format = "table";
  std::string out;
  std::string scenario_file;
  std::optional<double> wind;
  std::optional<std::string> rounding;
  std::optional<int> q_precision;
  std::optional<double> avg_repair_hours;
  std::vector<int> targets;
  double sweep_from = 80, sweep_to = 150, sweep_step = 10;
  std::string export_dir;
  bool export_json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Dataset load(const Options& o) {
  if (!o.dir.empty()) return load_dataset(o.dir, o.root);
  return load_bundled_dataset(o.dataset);
}

StormScenario scenario_from(const Options& o, bool need_wind) {
  StormScenario s;
  bool have_wind = false;
  if (!o.scenario_file.empty()) {
    const std::string text = read_file(o.scenario_file);
    s = parse_scenario(text, o.scenario_file);
    have_wind = text.find("wind_kmh") != std::string::npos;
  }
  if (o.wind) {
    s.wind_kmh = *o.wind;
    have_wind = true;
  }
  if (o.rounding) {
    auto r = parse_count_rounding(*o.rounding);
    if (!r) throw Error(Errc::SchemaError, "--rounding must be 'nearest' or 'ceil'");
    s.rounding = *r;
  }
  if (o.q_precision) s.q_precision = *o.q_precision;
  if (o.avg_repair_hours) s.avg_repair_hours = *o.avg_repair_hours;
  if (need_wind && !have_wind) throw Error(Errc::SchemaError, "a wind speed is required (--wind or scenario file)");
  s.validate();
  return s;
}

ReportFormat format_of(const Options& o) {
  auto f = parse_report_format(o.format);
  if (!f) throw Error(Errc::SchemaError, "--format must be json, csv or table");
  return *f;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, o.out + ": cannot write file");
  f << text;
}

void warn_to_stderr(const std::vector<Warning>& ws, ReportFormat fmt) {
  // Table and JSON output already carry the warnings.
  if (fmt != ReportFormat::Csv) return;
  for (const auto& w : ws) std::cerr << "warning " << w.code << ": " << w.message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Storm damage triage for radial distribution feeders"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--dataset", o.dataset, "Bundled dataset name")->capture_default_str();
  app.add_option("--dir", o.dir, "Directory holding buses/lines/classes/poles files")->check(CLI::ExistingDirectory);
  app.add_option("--root", o.root, "Root (slack) bus id; inferred when omitted");
  app.add_option("--format", o.format, "json, csv or table")->capture_default_str();
  app.add_option("--out", o.out, "Write the report to a file instead of stdout");
  app.add_option("--scenario", o.scenario_file, "key=value scenario file")->check(CLI::ExistingFile);
  app.add_option("--rounding", o.rounding, "Class damage rounding: nearest or ceil");
  app.add_option("--q-precision", o.q_precision, "Decimals kept in failure probabilities (default 4)");
  app.add_option("--avg-repair-hours", o.avg_repair_hours, "Average repair time per pole (default 4)");

  auto* validate = app.add_subcommand("validate", "Load and check a dataset");
  auto* damage = app.add_subcommand("damage", "Damaged poles and repair time per line");
  auto* rank = app.add_subcommand("rank", "Dynamic line values, priority ranking and tiers");
  auto* plan = app.add_subcommand("plan", "Repair teams needed to restore target buses");
  auto* sweep = app.add_subcommand("sweep", "Damaged poles per class over a range of wind speeds");
  auto* exporter = app.add_subcommand("export", "Write the dataset as CSV (or JSON) files");
  for (auto* sub : {damage, rank, plan}) sub->add_option("--wind", o.wind, "Wind speed in km/h");
  plan->add_option("--targets", o.targets, "Target bus ids, comma separated")->delimiter(',')->required();
  sweep->add_option("--from", o.sweep_from, "First speed (km/h)")->capture_default_str();
  sweep->add_option("--to", o.sweep_to, "Last speed (km/h), inclusive")->capture_default_str();
  sweep->add_option("--step", o.sweep_step, "Step (km/h)")->capture_default_str();
  exporter->add_option("--to-dir", o.export_dir, "Output directory")->required();
  exporter->add_flag("--json", o.export_json, "Write JSON instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    const ReportFormat fmt = format_of(o);
    const Dataset data = load(o);

    if (validate->parsed()) {
      warn_to_stderr(data.warnings, fmt);
      emit(o, render_validation(data, fmt));
    } else if (damage->parsed() || rank->parsed()) {
      const auto report = run_assessment(data, scenario_from(o, true));
      warn_to_stderr(report.warnings, fmt);
      emit(o, damage->parsed() ? render_damage(report, fmt) : render_ranking(report, fmt));
    } else if (plan->parsed()) {
      const auto report = run_assessment(data, scenario_from(o, true), o.targets);
      warn_to_stderr(report.warnings, fmt);
      emit(o, render_plan(report, fmt));
    } else if (sweep->parsed()) {
      const auto s = scenario_from(o, false);
      const auto speeds = speed_range(o.sweep_from, o.sweep_to, o.sweep_step);
      emit(o, render_sweep(wind_sweep(data.fragility, speeds, s.rounding), fmt));
    } else if (exporter->parsed()) {
      save_dataset(data, o.export_dir, o.export_json ? DatasetFormat::Json : DatasetFormat::Csv);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_parse_failure() ? kExitParse : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
