#pragma once

// Independent reference computations and printed fixtures for tests. Nothing
// here calls into the topology index of RadialNetwork.

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "gridtriage/network.hpp"

namespace gridtriage::testing {

// Lines that lose supply when `removed` opens: BFS from the root over the
// undirected edge list without that line.
inline std::set<LineId> reachability_descendants(const std::vector<Line>& lines, BusId root, LineId removed) {
  std::map<BusId, std::vector<BusId>> adj;
  for (const auto& l : lines) {
    if (l.id == removed) continue;
    adj[l.from_bus].push_back(l.to_bus);
    adj[l.to_bus].push_back(l.from_bus);
  }
  std::set<BusId> seen{root};
  std::queue<BusId> q;
  q.push(root);
  while (!q.empty()) {
    const BusId b = q.front();
    q.pop();
    for (BusId n : adj[b])
      if (seen.insert(n).second) q.push(n);
  }
  std::set<LineId> out;
  for (const auto& l : lines)
    if (l.id != removed && !seen.contains(l.to_bus)) out.insert(l.id);
  return out;
}

// Walk from `target` to the root by repeated edge-list search.
inline std::vector<LineId> walk_to_source(const std::vector<Line>& lines, BusId root, BusId target) {
  std::vector<LineId> path;
  BusId cur = target;
  while (cur != root) {
    auto it = std::find_if(lines.begin(), lines.end(), [cur](const Line& l) { return l.to_bus == cur; });
    if (it == lines.end()) break;
    path.push_back(it->id);
    cur = it->from_bus;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

struct RandomTree {
  std::vector<Bus> buses;
  std::vector<Line> lines;
  BusId root = 0;
};

// Random radial tree with `n_lines` lines and non-contiguous shuffled ids.
inline RandomTree random_tree(std::mt19937_64& rng, int n_lines) {
  RandomTree t;
  std::vector<BusId> bus_ids(n_lines + 1);
  std::vector<LineId> line_ids(n_lines);
  for (int i = 0; i <= n_lines; ++i) bus_ids[i] = 3 * i + 1;
  for (int i = 0; i < n_lines; ++i) line_ids[i] = 5 * i + 2;
  std::shuffle(bus_ids.begin(), bus_ids.end(), rng);
  std::shuffle(line_ids.begin(), line_ids.end(), rng);
  std::uniform_real_distribution<> load(0.0, 500.0), lf(0.05, 1.0), voll(1.0, 5000.0);
  std::uniform_int_distribution<> cls(0, 2);
  t.root = bus_ids[0];
  t.buses.push_back(Bus{t.root, 0.0, LoadClass::Ordinary, {}});
  for (int i = 1; i <= n_lines; ++i) {
    const LoadClass c = static_cast<LoadClass>(cls(rng));
    // Some zero loads so equality edges get exercised.
    const double l = (rng() % 7 == 0) ? 0.0 : load(rng);
    t.buses.push_back(Bus{bus_ids[i], l, c, {}});
    const int parent = std::uniform_int_distribution<>(0, i - 1)(rng);
    t.lines.push_back(Line{line_ids[i - 1], bus_ids[parent], bus_ids[i], lf(rng), voll(rng)});
  }
  std::shuffle(t.lines.begin(), t.lines.end(), rng);
  return t;
}

// Printed damaged-pole counts per class for speeds 80..150 step 10.
inline constexpr std::array<std::array<int, 4>, 8> kPrintedClassDamage{{
    {1, 7, 9, 2},
    {1, 7, 9, 2},
    {1, 7, 27, 10},
    {1, 32, 62, 17},
    {4, 57, 98, 21},
    {8, 81, 98, 21},
    {11, 106, 98, 21},
    {15, 106, 98, 21},
}};

// Printed expected damaged poles and repair hours for lines 1..33 at 105 km/h.
inline constexpr std::array<double, 33> kPrintedBt{
    2.1183, 2.1183, 3.2163, 3.8603, 3.2163, 2.51,   2.6426, 1.7618, 2.9103, 2.6926, 2.9103,
    1.3855, 2.6926, 3.0966, 1.5718, 1.7581, 2.0258, 3.5506, 2.3984, 2.9603, 2.9603, 1.1678,
    4.2723, 2.5063, 2.0258, 1.8081, 1.6218, 2.4563, 0.8903, 1.5718, 3.3643, 1.1678, 1.3041};
inline constexpr std::array<double, 33> kPrintedRepairHours{
    8.4732,  8.4732,  12.8652, 15.4412, 12.8652, 10.0400, 10.5704, 7.0472,  11.6412, 10.7704, 11.6412,
    5.5420,  10.7704, 12.3864, 6.2872,  7.0324,  8.1032,  14.2024, 9.5936,  11.8412, 11.8412, 4.6712,
    17.0892, 10.0252, 8.1032,  7.2324,  6.4872,  9.8252,  3.5612,  6.2872,  13.4572, 4.6712,  5.2164};

// Printed crew table: line -> (bt, teams), and the printed line order.
inline const std::map<LineId, std::pair<double, int>> kPrintedCrew{
    {3, {3.2163, 4}}, {1, {2.1183, 3}}, {2, {2.1183, 3}},  {23, {4.2723, 5}},
    {4, {3.8603, 4}}, {24, {2.5063, 3}}, {5, {3.2163, 4}}, {6, {2.51, 3}}};
inline constexpr std::array<LineId, 8> kPrintedCrewOrder{3, 1, 2, 23, 4, 24, 5, 6};
inline constexpr int kPrintedTotalTeams = 29;

}  // namespace gridtriage::testing
