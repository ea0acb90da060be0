#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "gridtriage/damage.hpp"
#include "gridtriage/errors.hpp"
#include "gridtriage/fragility.hpp"
#include "gridtriage/network.hpp"

namespace gridtriage {

/// A validated model: topology, fragility classes and per-line pole counts.
///
/// Input files (UTF-8, header row required):
///
///   buses.csv    bus_id,load_kw,load_class[,location_tag]
///   lines.csv    line_id,from_bus,to_bus,load_factor,voll
///   classes.csv  class_id,life_min_yr,life_max_yr,p0,v_th_kmh,v_max_kmh,count
///   poles.csv    line_id,class_id,count
///
/// Each may instead be a `.json` array of objects with the same keys. An
/// empty or `inf` life_max_yr means the class is open-ended.
struct Dataset {
  RadialNetwork network;
  FragilitySet fragility;
  std::map<LineId, LinePoleInventory> inventories;  // every network line has an entry
  std::vector<Warning> warnings;

  int total_poles() const noexcept;
};

// Cross-validates the parts. Inventories may omit lines (zero poles) but
// must not name unknown lines or classes (SchemaError).
Dataset make_dataset(RadialNetwork network, FragilitySet fragility,
                     std::vector<LinePoleInventory> inventories);

// Root is inferred when not given: bus 0 when referenced but not declared,
// otherwise the only declared bus no line energizes.
Dataset load_dataset(const std::filesystem::path& dir, std::optional<BusId> root = std::nullopt);

// Bundled datasets by name. Currently "ieee33". Throws SchemaError for an
// unknown name.
Dataset load_bundled_dataset(std::string_view name);

// Raw CSV text of a bundled dataset keyed by file name.
std::map<std::string, std::string_view> bundled_dataset_files(std::string_view name);

enum class DatasetFormat { Csv, Json };

void save_dataset(const Dataset& data, const std::filesystem::path& dir,
                  DatasetFormat format = DatasetFormat::Csv);

// Load from in-memory file contents (name -> text), e.g. bundled data.
Dataset load_dataset_texts(const std::map<std::string, std::string_view>& files,
                           std::string_view origin, std::optional<BusId> root = std::nullopt);

}  // namespace gridtriage
