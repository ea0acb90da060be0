#include "gridtriage/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "gridtriage/csv.hpp"
#include "json.hpp"

namespace gridtriage {

namespace {

using nlohmann::json;
using csv::Table;

constexpr const char* kSchemas[] = {"buses", "lines", "classes", "poles"};

std::string row_context(const Table& t, std::size_t row) {
  return t.source + ":" + std::to_string(t.row_lines[row]);
}

// A JSON array of flat objects viewed as a table, so both formats share one
// decoder. Each object is one row; its 1-based position stands in for the
// text line.
Table json_to_table(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                      ": " + e.what());
  }
  if (!doc.is_array()) throw Error(Errc::SchemaError, source + ": expected a JSON array of records");

  Table t;
  t.source = source;
  for (const auto& rec : doc) {
    if (!rec.is_object()) throw Error(Errc::SchemaError, source + ": every record must be an object");
    for (const auto& [key, _] : rec.items())
      if (!t.find(key)) t.header.push_back(key);
  }
  for (std::size_t r = 0; r < doc.size(); ++r) {
    std::vector<std::string> row(t.header.size());
    for (std::size_t c = 0; c < t.header.size(); ++c) {
      const auto it = doc[r].find(t.header[c]);
      if (it == doc[r].end() || it->is_null()) continue;
      if (it->is_string())
        row[c] = it->get<std::string>();
      else if (it->is_number_integer())
        row[c] = std::to_string(it->get<long long>());
      else if (it->is_number())
        row[c] = csv::format_real(it->get<double>());
      else
        throw Error(Errc::SchemaError, source + ": record " + std::to_string(r + 1) + " field '" +
                                           t.header[c] + "' must be a number or string");
    }
    t.rows.push_back(std::move(row));
    t.row_lines.push_back(r + 1);
  }
  return t;
}

int to_int(const Table& t, std::size_t row, std::size_t col) {
  const long long v = csv::to_integer(t, row, col);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw Error(Errc::ParseError, row_context(t, row) + ": integer out of range");
  return static_cast<int>(v);
}

struct Parsed {
  std::vector<Bus> buses;
  std::vector<Line> lines;
  std::vector<PoleClassSpec> classes;
  std::vector<LinePoleInventory> inventories;
  std::map<int, std::size_t> bus_rows, line_rows, class_rows;
  Table bus_table, line_table, class_table, pole_table;
};

void decode_buses(Parsed& p) {
  const Table& t = p.bus_table;
  const auto c_id = t.require("bus_id"), c_load = t.require("load_kw"), c_cls = t.require("load_class");
  const auto c_tag = t.find("location_tag");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Bus b;
    b.id = to_int(t, r, c_id);
    b.load_kw = csv::to_real(t, r, c_load);
    const auto cls = parse_load_class(t.rows[r][c_cls]);
    if (!cls)
      throw Error(Errc::SchemaError, row_context(t, r) + ": field 'load_class' must be critical, "
                                                         "important or ordinary, found '" +
                                         t.rows[r][c_cls] + "'");
    b.load_class = *cls;
    if (c_tag && !t.rows[r][*c_tag].empty()) b.location_tag = t.rows[r][*c_tag];
    p.bus_rows.emplace(b.id, r);
    p.buses.push_back(std::move(b));
  }
}

void decode_lines(Parsed& p) {
  const Table& t = p.line_table;
  const auto c_id = t.require("line_id"), c_from = t.require("from_bus"), c_to = t.require("to_bus"),
             c_lf = t.require("load_factor"), c_voll = t.require("voll");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Line l;
    l.id = to_int(t, r, c_id);
    l.from_bus = to_int(t, r, c_from);
    l.to_bus = to_int(t, r, c_to);
    l.load_factor = csv::to_real(t, r, c_lf);
    l.voll = csv::to_real(t, r, c_voll);
    p.line_rows.emplace(l.id, r);
    p.lines.push_back(l);
  }
}

void decode_classes(Parsed& p) {
  const Table& t = p.class_table;
  const auto c_id = t.require("class_id"), c_min = t.require("life_min_yr"),
             c_max = t.require("life_max_yr"), c_p0 = t.require("p0"), c_th = t.require("v_th_kmh"),
             c_vmax = t.require("v_max_kmh"), c_n = t.require("count");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    PoleClassSpec s;
    s.class_id = to_int(t, r, c_id);
    s.life_min_yr = csv::to_real(t, r, c_min);
    if (!t.rows[r][c_max].empty()) s.life_max_yr = csv::to_real(t, r, c_max);
    s.p0 = csv::to_real(t, r, c_p0);
    s.v_th = csv::to_real(t, r, c_th);
    s.v_max = csv::to_real(t, r, c_vmax);
    s.count = to_int(t, r, c_n);
    p.class_rows.emplace(s.class_id, r);
    p.classes.push_back(s);
  }
}

void decode_poles(Parsed& p) {
  const Table& t = p.pole_table;
  const auto c_line = t.require("line_id"), c_cls = t.require("class_id"), c_n = t.require("count");
  std::map<LineId, LinePoleInventory> by_line;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const LineId line = to_int(t, r, c_line);
    const ClassId cls = to_int(t, r, c_cls);
    const int n = to_int(t, r, c_n);
    if (n < 0)
      throw Error(Errc::InvalidValue, row_context(t, r) + ": pole count must be >= 0", {line, cls});
    auto& inv = by_line[line];
    inv.line_id = line;
    if (!inv.per_class_counts.emplace(cls, n).second)
      throw Error(Errc::SchemaError, row_context(t, r) + ": duplicate entry for line " +
                                         std::to_string(line) + " class " + std::to_string(cls),
                  {line, cls});
  }
  for (auto& [_, inv] : by_line) p.inventories.push_back(std::move(inv));
}

[[noreturn]] void rethrow_in(const Error& e, const Table& t, const std::map<int, std::size_t>& rows,
                             std::optional<int> id) {
  std::string where = t.source;
  if (id) {
    if (auto it = rows.find(*id); it != rows.end()) where = row_context(t, it->second);
  }
  throw Error(e.code(), where + ": " + e.what(), e.ids());
}

// Routes a network validation error to the file row of the entity it names.
[[noreturn]] void rethrow_network_error(const Error& e, const Parsed& p) {
  const auto& ids = e.ids();
  const std::string_view what = e.what();
  auto first = [&]() -> std::optional<int> {
    if (ids.empty()) return std::nullopt;
    return ids.front();
  };
  const bool about_line = what.find(": line ") != std::string_view::npos ||
                          what.find("duplicate line") != std::string_view::npos;
  switch (e.code()) {
    case Errc::DuplicateEnergizingLine:
      rethrow_in(e, p.line_table, p.line_rows,
                 ids.size() >= 3 ? std::optional<int>(ids[2]) : std::nullopt);
    case Errc::UnknownBus:
      rethrow_in(e, p.line_table, p.line_rows, first());
    case Errc::CycleDetected:
      rethrow_in(e, p.line_table, p.line_rows, about_line ? first() : std::nullopt);
    case Errc::DuplicateId:
    case Errc::InvalidValue:
      if (about_line) rethrow_in(e, p.line_table, p.line_rows, first());
      rethrow_in(e, p.bus_table, p.bus_rows, first());
    default:
      rethrow_in(e, p.bus_table, p.bus_rows, first());
  }
}

BusId infer_root(const Parsed& p) {
  std::set<BusId> declared, energized;
  for (const auto& b : p.buses) declared.insert(b.id);
  for (const auto& l : p.lines) energized.insert(l.to_bus);
  const bool source_referenced =
      std::any_of(p.lines.begin(), p.lines.end(), [](const Line& l) { return l.from_bus == kSourceBusId; });
  if (source_referenced && !declared.contains(kSourceBusId)) return kSourceBusId;
  std::vector<BusId> candidates;
  for (BusId b : declared)
    if (!energized.contains(b)) candidates.push_back(b);
  if (candidates.empty())
    throw Error(Errc::CycleDetected, p.line_table.source + ": every bus is energized by a line; no root");
  // Prefer a candidate that feeds something; the others surface as
  // DisconnectedBus during network validation.
  for (BusId c : candidates)
    if (std::any_of(p.lines.begin(), p.lines.end(), [c](const Line& l) { return l.from_bus == c; }))
      return c;
  return candidates.front();
}

Dataset assemble(Parsed& p, std::optional<BusId> root) {
  decode_buses(p);
  decode_lines(p);
  decode_classes(p);
  decode_poles(p);

  const BusId r = root ? *root : infer_root(p);
  std::optional<RadialNetwork> net;
  try {
    net = RadialNetwork::build(p.buses, p.lines, r);
  } catch (const Error& e) {
    rethrow_network_error(e, p);
  }

  std::optional<FragilitySet> frag;
  try {
    frag.emplace(p.classes);
  } catch (const Error& e) {
    rethrow_in(e, p.class_table, p.class_rows, e.ids().empty() ? std::nullopt
                                                               : std::optional<int>(e.ids().back()));
  }

  try {
    return make_dataset(std::move(*net), std::move(*frag), std::move(p.inventories));
  } catch (const Error& e) {
    throw Error(e.code(), p.pole_table.source + ": " + e.what(), e.ids());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int Dataset::total_poles() const noexcept {
  int n = 0;
  for (const auto& [_, inv] : inventories) n += inv.total();
  return n;
}

Dataset make_dataset(RadialNetwork network, FragilitySet fragility,
                     std::vector<LinePoleInventory> inventories) {
  Dataset d{std::move(network), std::move(fragility), {}, {}};
  for (auto& inv : inventories) {
    if (!d.network.has_line(inv.line_id))
      throw Error(Errc::SchemaError,
                  "pole inventory references undefined line " + std::to_string(inv.line_id),
                  {inv.line_id});
    for (const auto& [cls, n] : inv.per_class_counts) {
      if (!d.fragility.contains(cls))
        throw Error(Errc::SchemaError,
                    "line " + std::to_string(inv.line_id) + " references undefined class " +
                        std::to_string(cls),
                    {inv.line_id, cls});
      if (n < 0)
        throw Error(Errc::InvalidValue, "line " + std::to_string(inv.line_id) + " has a negative pole count",
                    {inv.line_id, cls});
    }
    const LineId id = inv.line_id;
    if (!d.inventories.emplace(id, std::move(inv)).second)
      throw Error(Errc::SchemaError, "duplicate inventory for line " + std::to_string(id), {id});
  }

  d.warnings = d.fragility.warnings();
  for (const Line& l : d.network.lines()) {
    auto [it, inserted] = d.inventories.try_emplace(l.id, LinePoleInventory{l.id, {}});
    if (inserted || it->second.total() == 0)
      d.warnings.push_back(Warning{"W-NO-POLES", "line " + std::to_string(l.id) + " has no poles"});
  }
  for (const auto& c : d.fragility.classes()) {
    int placed = 0;
    for (const auto& [_, inv] : d.inventories)
      if (auto it = inv.per_class_counts.find(c.class_id); it != inv.per_class_counts.end())
        placed += it->second;
    if (placed != c.count)
      d.warnings.push_back(Warning{"W-CLASS-COUNT", "class " + std::to_string(c.class_id) + " declares " +
                                                        std::to_string(c.count) + " poles but lines hold " +
                                                        std::to_string(placed)});
  }
  return d;
}

Dataset load_dataset_texts(const std::map<std::string, std::string_view>& files, std::string_view origin,
                           std::optional<BusId> root) {
  Parsed p;
  Table* tables[] = {&p.bus_table, &p.line_table, &p.class_table, &p.pole_table};
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string base = kSchemas[i];
    const std::string prefix = origin.empty() ? "" : std::string(origin) + "/";
    if (auto it = files.find(base + ".csv"); it != files.end())
      *tables[i] = csv::parse(it->second, prefix + base + ".csv");
    else if (auto jt = files.find(base + ".json"); jt != files.end())
      *tables[i] = json_to_table(jt->second, prefix + base + ".json");
    else
      throw Error(Errc::SchemaError, prefix + base + ".csv: file not found");
  }
  return assemble(p, root);
}

Dataset load_dataset(const std::filesystem::path& dir, std::optional<BusId> root) {
  if (!std::filesystem::is_directory(dir))
    throw Error(Errc::SchemaError, dir.string() + ": not a directory");
  std::map<std::string, std::string> owned;
  for (const char* base : kSchemas) {
    for (const char* ext : {".csv", ".json"}) {
      const auto path = dir / (std::string(base) + ext);
      if (std::filesystem::exists(path)) {
        owned.emplace(std::string(base) + ext, read_text(path));
        break;
      }
    }
  }
  std::map<std::string, std::string_view> views(owned.begin(), owned.end());
  return load_dataset_texts(views, dir.string(), root);
}

Dataset load_bundled_dataset(std::string_view name) {
  return load_dataset_texts(bundled_dataset_files(name), name);
}

void save_dataset(const Dataset& data, const std::filesystem::path& dir, DatasetFormat format) {
  std::filesystem::create_directories(dir);
  const auto& net = data.network;

  if (format == DatasetFormat::Csv) {
    auto open = [&](const char* name) {
      std::ofstream out(dir / name, std::ios::binary);
      if (!out) throw Error(Errc::ParseError, (dir / name).string() + ": cannot write file");
      return out;
    };
    {
      auto out = open("buses.csv");
      out << "bus_id,load_kw,load_class,location_tag\n";
      for (const Bus& b : net.buses())
        out << b.id << ',' << csv::format_real(b.load_kw) << ',' << to_string(b.load_class) << ','
            << csv::quote_if_needed(b.location_tag.value_or("")) << '\n';
    }
    {
      auto out = open("lines.csv");
      out << "line_id,from_bus,to_bus,load_factor,voll\n";
      for (const Line& l : net.lines())
        out << l.id << ',' << l.from_bus << ',' << l.to_bus << ',' << csv::format_real(l.load_factor)
            << ',' << csv::format_real(l.voll) << '\n';
    }
    {
      auto out = open("classes.csv");
      out << "class_id,life_min_yr,life_max_yr,p0,v_th_kmh,v_max_kmh,count\n";
      for (const auto& c : data.fragility.classes())
        out << c.class_id << ',' << csv::format_real(c.life_min_yr) << ','
            << (std::isinf(c.life_max_yr) ? std::string() : csv::format_real(c.life_max_yr)) << ','
            << csv::format_real(c.p0) << ',' << csv::format_real(c.v_th) << ','
            << csv::format_real(c.v_max) << ',' << c.count << '\n';
    }
    {
      auto out = open("poles.csv");
      out << "line_id,class_id,count\n";
      for (const auto& [id, inv] : data.inventories)
        for (const auto& [cls, n] : inv.per_class_counts) out << id << ',' << cls << ',' << n << '\n';
    }
    return;
  }

  using ojson = nlohmann::ordered_json;
  auto write = [&](const char* name, const ojson& doc) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw Error(Errc::ParseError, (dir / name).string() + ": cannot write file");
    out << doc.dump(2) << '\n';
  };
  ojson buses = ojson::array();
  for (const Bus& b : net.buses()) {
    ojson rec{{"bus_id", b.id}, {"load_kw", b.load_kw}, {"load_class", to_string(b.load_class)}};
    rec["location_tag"] = b.location_tag ? ojson(*b.location_tag) : ojson(nullptr);
    buses.push_back(std::move(rec));
  }
  write("buses.json", buses);
  ojson lines = ojson::array();
  for (const Line& l : net.lines())
    lines.push_back({{"line_id", l.id}, {"from_bus", l.from_bus}, {"to_bus", l.to_bus},
                     {"load_factor", l.load_factor}, {"voll", l.voll}});
  write("lines.json", lines);
  ojson classes = ojson::array();
  for (const auto& c : data.fragility.classes()) {
    ojson rec{{"class_id", c.class_id}, {"life_min_yr", c.life_min_yr}};
    rec["life_max_yr"] = std::isinf(c.life_max_yr) ? ojson(nullptr) : ojson(c.life_max_yr);
    rec["p0"] = c.p0;
    rec["v_th_kmh"] = c.v_th;
    rec["v_max_kmh"] = c.v_max;
    rec["count"] = c.count;
    classes.push_back(std::move(rec));
  }
  write("classes.json", classes);
  ojson poles = ojson::array();
  for (const auto& [id, inv] : data.inventories)
    for (const auto& [cls, n] : inv.per_class_counts)
      poles.push_back({{"line_id", id}, {"class_id", cls}, {"count", n}});
  write("poles.json", poles);
}

}  // namespace gridtriage
