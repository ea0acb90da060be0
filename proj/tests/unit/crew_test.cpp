#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gridtriage/assessment.hpp"
#include "gridtriage/crew.hpp"
#include "gridtriage/dataset.hpp"
#include "oracles.hpp"

namespace gridtriage {
namespace {

class CrewTest : public ::testing::Test {
 protected:
  void SetUp() override {
    scenario.wind_kmh = 105;
    report = run_assessment(data, scenario);
    for (const auto& l : report.lines) damage.emplace(l.line_id, LineDamage{l.line_id, l.bt, l.repair_hours, {}});
  }

  std::set<LineId> set_of(const std::vector<BusId>& targets) const {
    const auto r = restoration_set(data.network, report.ranking, targets);
    return {r.begin(), r.end()};
  }

  Dataset data = load_bundled_dataset("ieee33");
  StormScenario scenario;
  AssessmentReport report;
  std::map<LineId, LineDamage> damage;
};

TEST(TeamsTest, CeilingOfDamagedPoles) {
  EXPECT_EQ(teams_for_line(4.2723), 5);
  EXPECT_EQ(teams_for_line(2.51), 3);
  EXPECT_EQ(teams_for_line(3.0), 3);
  EXPECT_EQ(teams_for_line(0.0), 0);
  EXPECT_THROW(teams_for_line(-1.0), Error);
}

TEST_F(CrewTest, RestorationSetForCriticalAndImportantLoads) {
  EXPECT_EQ(set_of({4, 6, 24}), (std::set<LineId>{1, 2, 3, 4, 5, 6, 23, 24}));
  EXPECT_EQ(set_of({3, 6, 24}), set_of({4, 6, 24}));
  EXPECT_EQ(set_of({6, 4}), set_of({6}));
  EXPECT_EQ(set_of({1}), (std::set<LineId>{1}));
  EXPECT_TRUE(set_of({}).empty());
  EXPECT_THROW(set_of({99}), Error);

  // Ordered by rank.
  const auto ordered = restoration_set(data.network, report.ranking, std::vector<BusId>{4, 6, 24});
  std::map<LineId, int> rank;
  for (const auto& r : report.ranking) rank[r.line_id] = r.rank;
  for (std::size_t i = 1; i < ordered.size(); ++i) EXPECT_LT(rank[ordered[i - 1]], rank[ordered[i]]);
}

TEST_F(CrewTest, PlanMatchesPrintedCrewTable) {
  const auto plan = build_crew_plan(data.network, report.ranking, damage, std::vector<BusId>{4, 6, 24});
  ASSERT_EQ(plan.entries.size(), testing::kPrintedCrew.size());
  for (const auto& e : plan.entries) {
    const auto& [bt, teams] = testing::kPrintedCrew.at(e.line_id);
    EXPECT_NEAR(e.bt, bt, 5e-5) << "line " << e.line_id;
    EXPECT_EQ(e.teams, teams) << "line " << e.line_id;
  }
  EXPECT_EQ(plan.total_teams, testing::kPrintedTotalTeams);
}

TEST_F(CrewTest, PrintedOrderDiffersFromValueRanking) {
  // The printed crew order puts line 3 ahead of lines 1 and 2; subtree sums
  // cannot, because line 1 feeds both.
  const auto plan = build_crew_plan(data.network, report.ranking, damage, std::vector<BusId>{4, 6, 24});
  std::vector<LineId> order;
  for (const auto& e : plan.entries) order.push_back(e.line_id);
  const std::vector<LineId> printed(testing::kPrintedCrewOrder.begin(), testing::kPrintedCrewOrder.end());
  EXPECT_NE(order, printed);
  EXPECT_EQ(order.front(), 1);
  std::vector<LineId> a = order, b = printed;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
}

TEST_F(CrewTest, EmptyAndUndamaged) {
  const auto none = build_crew_plan(data.network, report.ranking, damage, std::vector<BusId>{});
  EXPECT_TRUE(none.entries.empty());
  EXPECT_EQ(none.total_teams, 0);

  auto undamaged = damage;
  undamaged[1].bt = 0;
  const auto one = build_crew_plan(data.network, report.ranking, undamaged, std::vector<BusId>{1});
  ASSERT_EQ(one.entries.size(), 1u);
  EXPECT_EQ(one.entries[0].teams, 0);
  EXPECT_EQ(one.total_teams, 0);
}

TEST_F(CrewTest, MonotoneInWindAndTargets) {
  const std::vector<BusId> targets{4, 6, 24};
  int prev = -1;
  for (int v = 0; v <= 200; v += 5) {
    StormScenario s = scenario;
    s.wind_kmh = v;
    const auto r = run_assessment(data, s, targets);
    ASSERT_TRUE(r.crew);
    int expected = 0;
    for (const auto& e : r.crew->entries) expected += static_cast<int>(std::ceil(e.bt - 1e-9));
    EXPECT_EQ(r.crew->total_teams, expected);
    EXPECT_GE(r.crew->total_teams, prev) << v << " km/h";
    prev = r.crew->total_teams;
  }

  std::mt19937_64 rng(8);
  std::vector<BusId> grown;
  std::set<LineId> prev_set;
  for (int step = 0; step < 20; ++step) {
    grown.push_back(std::uniform_int_distribution<>(1, 33)(rng));
    const auto s = set_of(grown);
    EXPECT_TRUE(std::includes(s.begin(), s.end(), prev_set.begin(), prev_set.end()));
    for (LineId l : s)
      if (auto p = data.network.parent_line(l)) EXPECT_TRUE(s.contains(*p));
    prev_set = s;
  }
}

TEST_F(CrewTest, SaturatedWindNeedsEveryPoleOnPaths) {
  StormScenario s = scenario;
  s.wind_kmh = 200;
  const auto r = run_assessment(data, s, std::vector<BusId>{4, 6, 24});
  int poles = 0;
  for (LineId l : {1, 2, 3, 4, 5, 6, 23, 24}) poles += data.inventories.at(l).total();
  EXPECT_EQ(r.crew->total_teams, poles);
}

}  // namespace
}  // namespace gridtriage
