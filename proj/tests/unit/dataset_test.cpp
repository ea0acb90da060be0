#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "gridtriage/dataset.hpp"

namespace gridtriage {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("gridtriage_test_" + name + "_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, std::string_view text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

void expect_same(const Dataset& a, const Dataset& b) {
  ASSERT_EQ(a.network.line_count(), b.network.line_count());
  EXPECT_EQ(a.network.root(), b.network.root());
  for (const Line& l : a.network.lines()) {
    const Line& o = b.network.line(l.id);
    EXPECT_EQ(l.from_bus, o.from_bus);
    EXPECT_EQ(l.to_bus, o.to_bus);
    EXPECT_EQ(l.load_factor, o.load_factor);
    EXPECT_EQ(l.voll, o.voll);
  }
  for (const Bus& bus : a.network.buses()) {
    const Bus& o = b.network.bus(bus.id);
    EXPECT_EQ(bus.load_kw, o.load_kw);
    EXPECT_EQ(bus.load_class, o.load_class);
    EXPECT_EQ(bus.location_tag, o.location_tag);
  }
  ASSERT_EQ(a.fragility.classes().size(), b.fragility.classes().size());
  for (std::size_t i = 0; i < a.fragility.classes().size(); ++i) {
    const auto& x = a.fragility.classes()[i];
    const auto& y = b.fragility.classes()[i];
    EXPECT_EQ(x.class_id, y.class_id);
    EXPECT_EQ(x.life_min_yr, y.life_min_yr);
    EXPECT_EQ(x.life_max_yr, y.life_max_yr);
    EXPECT_EQ(x.p0, y.p0);
    EXPECT_EQ(x.v_th, y.v_th);
    EXPECT_EQ(x.v_max, y.v_max);
    EXPECT_EQ(x.count, y.count);
  }
  for (const auto& [id, inv] : a.inventories) EXPECT_EQ(inv.per_class_counts, b.inventories.at(id).per_class_counts);
}

TEST(DatasetTest, BundledIeee33) {
  const auto d = load_bundled_dataset("ieee33");
  EXPECT_EQ(d.network.line_count(), 33u);
  EXPECT_EQ(d.fragility.classes().size(), 4u);
  EXPECT_EQ(d.total_poles(), 240);
  EXPECT_EQ(d.total_poles(), d.fragility.total_count());
  EXPECT_EQ(d.network.line(23).load_factor, 0.91);
  EXPECT_EQ(d.network.bus(4).load_class, LoadClass::Critical);
  EXPECT_EQ(d.network.bus(6).load_class, LoadClass::Important);
  EXPECT_EQ(d.network.bus(24).load_class, LoadClass::Important);
  EXPECT_EQ(d.network.bus(1).load_kw, 0.0);
  for (const Line& l : d.network.lines()) EXPECT_EQ(l.voll, 3200.0);
  EXPECT_EQ(d.inventories.at(8).per_class_counts, (std::map<ClassId, int>{{2, 6}, {4, 1}}));
  EXPECT_EQ(d.inventories.at(10).per_class_counts, (std::map<ClassId, int>{{1, 1}, {2, 2}, {3, 5}}));
  EXPECT_THROW(load_bundled_dataset("ieee123"), Error);
}

TEST(DatasetTest, DirectoryCopyMatchesBundled) {
  expect_same(load_dataset(fs::path(GRIDTRIAGE_DATA_DIR) / "ieee33"), load_bundled_dataset("ieee33"));
}

TEST(DatasetTest, CsvAndJsonRoundTrip) {
  const auto original = load_bundled_dataset("ieee33");
  for (auto fmt : {DatasetFormat::Csv, DatasetFormat::Json}) {
    const auto dir = scratch_dir(fmt == DatasetFormat::Csv ? "csv" : "json");
    save_dataset(original, dir, fmt);
    const auto again = load_dataset(dir);
    expect_same(original, again);
    fs::remove_all(dir);
  }
}

std::map<std::string, std::string> bundled_copy() {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : bundled_dataset_files("ieee33")) out.emplace(k, std::string(v));
  return out;
}

Error load_error(const std::map<std::string, std::string>& files) {
  std::map<std::string, std::string_view> views(files.begin(), files.end());
  try {
    load_dataset_texts(views, "mem");
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "load succeeded";
  return Error(Errc::InvalidValue, "");
}

TEST(DatasetTest, UnknownClassInPoles) {
  auto files = bundled_copy();
  files["poles.csv"] += "3,9,2\n";
  const auto e = load_error(files);
  EXPECT_EQ(e.code(), Errc::SchemaError);
  EXPECT_NE(std::string(e.what()).find("poles.csv"), std::string::npos);
}

TEST(DatasetTest, ErrorsNameFileAndRow) {
  auto files = bundled_copy();
  auto& lines = files["lines.csv"];
  lines.replace(lines.find("\n5,4,5,"), 7, "\n5,4,99,");
  auto e = load_error(files);
  EXPECT_EQ(e.code(), Errc::UnknownBus);
  EXPECT_NE(std::string(e.what()).find("lines.csv:6"), std::string::npos) << e.what();

  files = bundled_copy();
  files["classes.csv"] += "5,40,,abc,90,115,1\n";
  e = load_error(files);
  EXPECT_EQ(e.code(), Errc::ParseError);
  EXPECT_TRUE(e.is_parse_failure());
  EXPECT_NE(std::string(e.what()).find("classes.csv"), std::string::npos);

  files = bundled_copy();
  files["poles.csv"] += "4,2,-1\n";
  EXPECT_EQ(load_error(files).code(), Errc::InvalidValue);

  files = bundled_copy();
  files["buses.csv"] = "bus_id,load_kw\n1,0\n";
  EXPECT_EQ(load_error(files).code(), Errc::SchemaError);
}

TEST(DatasetTest, WarningsForMissingPolesAndCountMismatch) {
  auto files = bundled_copy();
  auto& poles = files["poles.csv"];
  std::string kept;
  std::istringstream in(poles);
  for (std::string row; std::getline(in, row);)
    if (row.rfind("33,", 0) != 0) kept += row + "\n";
  poles = kept;
  std::map<std::string, std::string_view> views(files.begin(), files.end());
  const auto d = load_dataset_texts(views, "mem");
  bool no_poles = false, count = false;
  for (const auto& w : d.warnings) {
    no_poles |= w.code == "W-NO-POLES";
    count |= w.code == "W-CLASS-COUNT";
  }
  EXPECT_TRUE(no_poles);
  EXPECT_TRUE(count);
  EXPECT_EQ(d.inventories.at(33).total(), 0);
}

TEST(DatasetTest, JsonParseErrorHasPosition) {
  const auto dir = scratch_dir("badjson");
  for (const auto& [name, text] : bundled_dataset_files("ieee33"))
    if (name != "lines.csv") write(dir / name, text);
  write(dir / "lines.json", "[{\"line_id\": 1,\n \"from_bus\": }]");
  try {
    load_dataset(dir);
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.is_parse_failure());
    EXPECT_NE(std::string(e.what()).find("lines.json"), std::string::npos) << e.what();
  }
  fs::remove_all(dir);
}

}  // namespace
}  // namespace gridtriage
