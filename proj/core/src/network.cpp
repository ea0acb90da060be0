#include "gridtriage/network.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_set>

#include "gridtriage/errors.hpp"

namespace gridtriage {

std::string_view to_string(LoadClass c) {
  switch (c) {
    case LoadClass::Critical: return "critical";
    case LoadClass::Important: return "important";
    case LoadClass::Ordinary: return "ordinary";
  }
  return "ordinary";
}

std::optional<LoadClass> parse_load_class(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "critical") return LoadClass::Critical;
  if (lower == "important") return LoadClass::Important;
  if (lower == "ordinary" || lower == "regular") return LoadClass::Ordinary;
  return std::nullopt;
}

namespace {

void check_values(const std::vector<Bus>& buses, const std::vector<Line>& lines) {
  for (const auto& b : buses) {
    if (b.id < 0) throw Error(Errc::InvalidValue, "bus id must be non-negative", {b.id});
    if (!(b.load_kw >= 0.0) || !std::isfinite(b.load_kw))
      throw Error(Errc::InvalidValue, "bus " + std::to_string(b.id) + " load must be >= 0", {b.id});
  }
  for (const auto& l : lines) {
    if (l.id <= 0) throw Error(Errc::InvalidValue, "line id must be positive", {l.id});
    if (!(l.load_factor > 0.0 && l.load_factor <= 1.0))
      throw Error(Errc::InvalidValue,
                  "line " + std::to_string(l.id) + " load_factor must lie in (0, 1]", {l.id});
    if (!(l.voll > 0.0) || !std::isfinite(l.voll))
      throw Error(Errc::InvalidValue, "line " + std::to_string(l.id) + " voll must be > 0", {l.id});
  }
}

}  // namespace

RadialNetwork RadialNetwork::build(std::vector<Bus> buses, std::vector<Line> lines, BusId root) {
  check_values(buses, lines);

  RadialNetwork net;
  net.root_ = root;

  std::sort(buses.begin(), buses.end(), [](const Bus& a, const Bus& b) { return a.id < b.id; });
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < buses.size(); ++i)
    if (buses[i].id == buses[i - 1].id)
      throw Error(Errc::DuplicateId, "duplicate bus id " + std::to_string(buses[i].id), {buses[i].id});
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (lines[i].id == lines[i - 1].id)
      throw Error(Errc::DuplicateId, "duplicate line id " + std::to_string(lines[i].id), {lines[i].id});

  const bool root_listed = std::any_of(buses.begin(), buses.end(),
                                       [root](const Bus& b) { return b.id == root; });
  if (!root_listed) {
    if (root != kSourceBusId)
      throw Error(Errc::UnknownRoot, "root bus " + std::to_string(root) + " is not defined", {root});
    buses.insert(buses.begin(), Bus{kSourceBusId, 0.0, LoadClass::Ordinary, std::nullopt});
    net.synthetic_source_ = true;
  }

  net.buses_ = std::move(buses);
  net.lines_ = std::move(lines);
  for (std::size_t i = 0; i < net.buses_.size(); ++i) net.bus_index_.emplace(net.buses_[i].id, i);
  for (std::size_t i = 0; i < net.lines_.size(); ++i) net.line_index_.emplace(net.lines_[i].id, i);

  if (net.bus(root).load_kw != 0.0)
    throw Error(Errc::InvalidValue, "root bus " + std::to_string(root) + " must carry zero load", {root});

  for (std::size_t i = 0; i < net.lines_.size(); ++i) {
    const Line& l = net.lines_[i];
    for (BusId end : {l.from_bus, l.to_bus})
      if (!net.bus_index_.contains(end))
        throw Error(Errc::UnknownBus,
                    "line " + std::to_string(l.id) + " references undefined bus " + std::to_string(end),
                    {l.id, end});
    if (l.from_bus == l.to_bus)
      throw Error(Errc::CycleDetected, "line " + std::to_string(l.id) + " is a self-loop", {l.id});
    if (l.to_bus == root)
      throw Error(Errc::CycleDetected,
                  "line " + std::to_string(l.id) + " energizes the root bus " + std::to_string(root),
                  {l.id, root});
    auto [it, inserted] = net.energizing_.emplace(l.to_bus, i);
    if (!inserted)
      throw Error(Errc::DuplicateEnergizingLine,
                  "bus " + std::to_string(l.to_bus) + " is energized by lines " +
                      std::to_string(net.lines_[it->second].id) + " and " + std::to_string(l.id),
                  {l.to_bus, net.lines_[it->second].id, l.id});
  }

  const std::size_t n = net.lines_.size();
  net.parent_.assign(n, std::nullopt);
  net.children_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    auto up = net.energizing_.find(net.lines_[i].from_bus);
    if (up != net.energizing_.end()) {
      net.parent_[i] = up->second;
      net.children_[up->second].push_back(i);  // lines_ ascending, so children stay ascending
    }
  }

  // Pre-order walk from the lines leaving the root.
  net.preorder_.reserve(n);
  net.preorder_pos_.assign(n, n);
  net.subtree_size_.assign(n, 1);
  net.depth_.assign(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t i = n; i-- > 0;)
    if (net.lines_[i].from_bus == root) stack.push_back(i);
  for (std::size_t i : stack) net.depth_[i] = 1;
  while (!stack.empty()) {
    const std::size_t cur = stack.back();
    stack.pop_back();
    net.preorder_pos_[cur] = net.preorder_.size();
    net.preorder_.push_back(cur);
    const auto& kids = net.children_[cur];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      net.depth_[*it] = net.depth_[cur] + 1;
      stack.push_back(*it);
    }
  }
  for (std::size_t k = net.preorder_.size(); k-- > 0;) {
    const std::size_t i = net.preorder_[k];
    if (net.parent_[i]) net.subtree_size_[*net.parent_[i]] += net.subtree_size_[i];
  }

  if (net.preorder_.size() != n || net.buses_.size() != n + 1) {
    // Something is unreachable. Bus parent pointers form a functional graph,
    // so walking upward either revisits a bus (cycle) or stops at a bus with
    // no energizing line other than the root (orphan).
    std::vector<bool> reached(net.buses_.size(), false);
    reached[net.bus_index_.at(root)] = true;
    for (std::size_t i : net.preorder_) reached[net.bus_index_.at(net.lines_[i].to_bus)] = true;
    for (std::size_t bi = 0; bi < net.buses_.size(); ++bi) {
      if (reached[bi]) continue;
      std::unordered_set<BusId> seen;
      BusId cur = net.buses_[bi].id;
      while (true) {
        if (!seen.insert(cur).second) {
          std::vector<BusId> members;
          BusId walk = cur;
          do {
            members.push_back(walk);
            walk = net.lines_[net.energizing_.at(walk)].from_bus;
          } while (walk != cur);
          std::sort(members.begin(), members.end());
          std::string msg = "cycle through buses";
          for (BusId m : members) msg += " " + std::to_string(m);
          throw Error(Errc::CycleDetected, msg, members);
        }
        auto e = net.energizing_.find(cur);
        if (e == net.energizing_.end()) {
          throw Error(Errc::DisconnectedBus,
                      "bus " + std::to_string(net.buses_[bi].id) + " is not reachable from root " +
                          std::to_string(root),
                      {net.buses_[bi].id});
        }
        cur = net.lines_[e->second].from_bus;
      }
    }
  }
  return net;
}

std::span<const Bus> RadialNetwork::buses() const noexcept {
  std::span<const Bus> all(buses_);
  return synthetic_source_ ? all.subspan(1) : all;
}

bool RadialNetwork::has_bus(BusId id) const {
  return bus_index_.contains(id) && !(synthetic_source_ && id == kSourceBusId);
}

bool RadialNetwork::has_line(LineId id) const { return line_index_.contains(id); }

const Bus& RadialNetwork::bus(BusId id) const {
  auto it = bus_index_.find(id);
  if (it == bus_index_.end())
    throw Error(Errc::UnknownBus, "bus " + std::to_string(id) + " does not exist", {id});
  return buses_[it->second];
}

const Line& RadialNetwork::line(LineId id) const { return lines_[line_index(id)]; }

std::size_t RadialNetwork::line_index(LineId id) const {
  auto it = line_index_.find(id);
  if (it == line_index_.end())
    throw Error(Errc::UnknownLine, "line " + std::to_string(id) + " does not exist", {id});
  return it->second;
}

std::optional<LineId> RadialNetwork::energizing_line(BusId b) const {
  bus(b);
  auto it = energizing_.find(b);
  if (it == energizing_.end()) return std::nullopt;
  return lines_[it->second].id;
}

std::optional<LineId> RadialNetwork::parent_line(LineId id) const {
  const auto& p = parent_[line_index(id)];
  if (!p) return std::nullopt;
  return lines_[*p].id;
}

std::vector<LineId> RadialNetwork::child_lines(LineId id) const {
  std::vector<LineId> out;
  for (std::size_t c : children_[line_index(id)]) out.push_back(lines_[c].id);
  return out;
}

std::vector<LineId> RadialNetwork::descendants(LineId id) const {
  const std::size_t i = line_index(id);
  const std::size_t begin = preorder_pos_[i] + 1;
  const std::size_t end = preorder_pos_[i] + subtree_size_[i];
  std::vector<LineId> out;
  out.reserve(end - begin);
  for (std::size_t k = begin; k < end; ++k) out.push_back(lines_[preorder_[k]].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LineId> RadialNetwork::path_from_source(BusId target) const {
  bus(target);
  std::vector<LineId> path;
  auto e = energizing_.find(target);
  if (e == energizing_.end()) return path;
  std::optional<std::size_t> cur = e->second;
  while (cur) {
    path.push_back(lines_[*cur].id);
    cur = parent_[*cur];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::size_t RadialNetwork::depth(LineId id) const { return depth_[line_index(id)]; }

}  // namespace gridtriage
