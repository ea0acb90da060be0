#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gridtriage {

using BusId = int;
using LineId = int;

// Id of the source node that feeds the substation line when a dataset does
// not list it as a bus.
inline constexpr BusId kSourceBusId = 0;

enum class LoadClass { Critical, Important, Ordinary };

std::string_view to_string(LoadClass c);
std::optional<LoadClass> parse_load_class(std::string_view text);

struct Bus {
  BusId id = 0;
  double load_kw = 0.0;
  LoadClass load_class = LoadClass::Ordinary;
  std::optional<std::string> location_tag;  // echoed, never interpreted

  friend bool operator==(const Bus&, const Bus&) = default;
};

struct Line {
  LineId id = 0;
  BusId from_bus = 0;
  BusId to_bus = 0;  // the bus this line energizes
  double load_factor = 1.0;
  double voll = 1.0;

  friend bool operator==(const Line&, const Line&) = default;
};

/// Radial feeder: a tree of lines rooted at the slack bus.
///
/// Immutable once built. Lines are kept in ascending id order and every
/// subtree occupies a contiguous slice of a pre-order walk, so descendant
/// enumeration costs O(subtree).
class RadialNetwork {
 public:
  /// Validates the edge list and indexes the topology.
  ///
  /// Throws Error with DuplicateId, UnknownRoot, UnknownBus, InvalidValue,
  /// DuplicateEnergizingLine, CycleDetected or DisconnectedBus. When `root`
  /// is kSourceBusId and no such bus is supplied, a zero-load source node is
  /// synthesized; it is not returned by buses().
  static RadialNetwork build(std::vector<Bus> buses, std::vector<Line> lines, BusId root);

  BusId root() const noexcept { return root_; }
  bool has_synthetic_source() const noexcept { return synthetic_source_; }

  // User-supplied buses, ascending id.
  std::span<const Bus> buses() const noexcept;
  // Ascending id.
  std::span<const Line> lines() const noexcept { return lines_; }
  std::size_t line_count() const noexcept { return lines_.size(); }

  bool has_bus(BusId id) const;
  bool has_line(LineId id) const;
  const Bus& bus(BusId id) const;
  const Line& line(LineId id) const;

  // Bus a line delivers power to.
  const Bus& served_bus(LineId id) const { return bus(line(id).to_bus); }

  std::optional<LineId> energizing_line(BusId bus) const;
  std::optional<LineId> parent_line(LineId id) const;
  std::vector<LineId> child_lines(LineId id) const;

  /// Every line whose path to the root passes through `id`, excluding `id`
  /// itself, in ascending id order. Throws UnknownLine.
  std::vector<LineId> descendants(LineId id) const;

  /// Lines from the root out to `target`, root-first. Empty for the root.
  /// Throws UnknownBus.
  std::vector<LineId> path_from_source(BusId target) const;

  std::size_t depth(LineId id) const;

 private:
  RadialNetwork() = default;

  std::size_t line_index(LineId id) const;

  BusId root_ = 0;
  bool synthetic_source_ = false;
  std::vector<Bus> buses_;  // ascending id; synthetic source first when present
  std::vector<Line> lines_;
  std::unordered_map<BusId, std::size_t> bus_index_;
  std::unordered_map<LineId, std::size_t> line_index_;
  std::unordered_map<BusId, std::size_t> energizing_;  // bus -> line index
  std::vector<std::optional<std::size_t>> parent_;     // per line index
  std::vector<std::vector<std::size_t>> children_;     // per line index, ascending id
  std::vector<std::size_t> preorder_;                  // line indices
  std::vector<std::size_t> preorder_pos_;              // per line index
  std::vector<std::size_t> subtree_size_;              // per line index, incl. self
  std::vector<std::size_t> depth_;                     // per line index, root feeder = 1
};

}  // namespace gridtriage
