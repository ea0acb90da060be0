#include <gtest/gtest.h>

#include "gridtriage/assessment.hpp"
#include "gridtriage/dataset.hpp"
#include "gridtriage/report.hpp"
#include "json.hpp"

namespace gridtriage {
namespace {

class ReportTest : public ::testing::Test {
 protected:
  void SetUp() override {
    StormScenario s;
    s.wind_kmh = 105;
    report = run_assessment(data, s, std::vector<BusId>{4, 6, 24});
  }
  Dataset data = load_bundled_dataset("ieee33");
  AssessmentReport report;
};

TEST(FormatTest, ParseAndFixed) {
  EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::Csv);
  EXPECT_EQ(parse_report_format("table"), ReportFormat::Table);
  EXPECT_FALSE(parse_report_format("xml"));
  EXPECT_EQ(fixed4(2.51), "2.5100");
  EXPECT_EQ(fixed4(0), "0.0000");
}

TEST_F(ReportTest, RankingJson) {
  const auto j = nlohmann::json::parse(render_ranking(report, ReportFormat::Json));
  ASSERT_EQ(j["ranking"].size(), 33u);
  EXPECT_EQ(j["ranking"][0]["rank"], 1);
  EXPECT_EQ(j["ranking"][0]["line_id"], 1);
  EXPECT_EQ(j["ranking"][0]["tier"], "red");
  EXPECT_EQ(j["scenario"]["wind_kmh"], 105.0);
  for (const auto& row : j["ranking"]) {
    const double v = row["dynamic_line_value"];
    EXPECT_NEAR(row["value_e13"].get<double>(), v / 1e13, 5e-5);
  }
}

TEST_F(ReportTest, DamageCsvAndTable) {
  const auto csv = render_damage(report, ReportFormat::Csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "line_id,poles,bt,repair_hours");
  EXPECT_NE(csv.find("\n23,"), std::string::npos);
  EXPECT_NE(csv.find(",4.2723,17.0892\n"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 34);
  const auto table = render_damage(report, ReportFormat::Table);
  EXPECT_NE(table.find("0.1863"), std::string::npos);
  EXPECT_NE(table.find("notes:"), std::string::npos);
}

TEST_F(ReportTest, PlanAllFormats) {
  const auto j = nlohmann::json::parse(render_plan(report, ReportFormat::Json));
  EXPECT_EQ(j["total_teams"], 29);
  EXPECT_EQ(j["entries"].size(), 8u);
  EXPECT_EQ(j["targets"], (std::vector<int>{4, 6, 24}));
  const auto csv = render_plan(report, ReportFormat::Csv);
  EXPECT_NE(csv.find("total,,29\n"), std::string::npos);
  EXPECT_NE(render_plan(report, ReportFormat::Table).find("total teams: 29"), std::string::npos);

  StormScenario s;
  s.wind_kmh = 105;
  const auto no_plan = run_assessment(data, s);
  EXPECT_THROW(render_plan(no_plan, ReportFormat::Json), Error);
}

TEST_F(ReportTest, SweepAndValidation) {
  const auto rows = wind_sweep(data.fragility, speed_range(80, 150, 10));
  const auto csv = render_sweep(rows, ReportFormat::Csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "wind_kmh,class_1,class_2,class_3,class_4,total");
  EXPECT_NE(csv.find("\n120,4,57,98,21,180\n"), std::string::npos);
  const auto j = nlohmann::json::parse(render_sweep(rows, ReportFormat::Json));
  EXPECT_EQ(j["sweep"].size(), 8u);

  const auto v = nlohmann::json::parse(render_validation(data, ReportFormat::Json));
  EXPECT_EQ(v["valid"], true);
  EXPECT_EQ(v["lines"], 33);
  EXPECT_EQ(v["total_poles"], 240);
  EXPECT_NE(render_validation(data, ReportFormat::Table).find("33"), std::string::npos);
}

TEST_F(ReportTest, RenderingIsDeterministic) {
  StormScenario s;
  s.wind_kmh = 105;
  const auto again = run_assessment(data, s, std::vector<BusId>{4, 6, 24});
  for (auto f : {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Table}) {
    EXPECT_EQ(render_ranking(report, f), render_ranking(again, f));
    EXPECT_EQ(render_damage(report, f), render_damage(again, f));
    EXPECT_EQ(render_plan(report, f), render_plan(again, f));
  }
}

}  // namespace
}  // namespace gridtriage
