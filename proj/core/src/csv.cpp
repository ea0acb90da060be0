#include "gridtriage/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gridtriage/errors.hpp"

namespace gridtriage::csv {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line, std::size_t col,
                       const std::string& what) {
  throw Error(Errc::ParseError,
              source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::optional<std::size_t> Table::find(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  return std::nullopt;
}

std::size_t Table::require(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(Errc::SchemaError, source + ": missing required column '" + std::string(name) + "'");
}

Table parse(std::string_view text, std::string source) {
  Table table;
  table.source = std::move(source);
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::string> record;
  std::string field;
  std::size_t line = 1, col = 1;
  std::size_t record_line = 1;
  bool in_quotes = false, field_quoted = false, at_record_start = true;

  auto end_field = [&] {
    record.push_back(field_quoted ? field : std::string(trim(field)));
    field.clear();
    field_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = record.size() == 1 && record[0].empty();
    if (!blank) {
      if (table.header.empty()) {
        table.header = std::move(record);
      } else {
        if (record.size() != table.header.size())
          fail(table.source, record_line, 1,
               "expected " + std::to_string(table.header.size()) + " fields, found " +
                   std::to_string(record.size()));
        table.rows.push_back(std::move(record));
        table.row_lines.push_back(record_line);
      }
    }
    record.clear();
    at_record_start = true;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (at_record_start) {
      record_line = line;
      at_record_start = false;
      if (ch == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
        ++line;
        col = 1;
        at_record_start = true;
        continue;
      }
    }
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
          ++col;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(ch);
        if (ch == '\n') {
          ++line;
          col = 0;
        }
      }
    } else if (ch == '"') {
      if (!trim(field).empty()) fail(table.source, line, col, "unexpected quote inside field");
      field.clear();
      in_quotes = true;
      field_quoted = true;
    } else if (ch == ',') {
      end_field();
    } else if (ch == '\r') {
      // tolerated before \n
    } else if (ch == '\n') {
      end_record();
      ++line;
      col = 0;
    } else {
      if (field_quoted) fail(table.source, line, col, "characters after closing quote");
      field.push_back(ch);
    }
    ++col;
  }
  if (in_quotes) fail(table.source, line, col, "unterminated quoted field");
  if (!at_record_start) end_record();
  if (table.header.empty()) fail(table.source, 1, 1, "missing header row");
  return table;
}

Table read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

long long to_integer(const Table& t, std::size_t row, std::size_t col) {
  const std::string& s = t.rows[row][col];
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    fail(t.source, t.row_lines[row], col + 1,
         "column '" + t.header[col] + "': expected an integer, found '" + s + "'");
  return v;
}

double to_real(const Table& t, std::size_t row, std::size_t col) {
  const std::string& s = t.rows[row][col];
  if (s == "inf" || s == "Inf" || s == "INF") return HUGE_VAL;
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    fail(t.source, t.row_lines[row], col + 1,
         "column '" + t.header[col] + "': expected a number, found '" + s + "'");
  return v;
}

std::string quote_if_needed(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos &&
      (field.empty() || (field.front() != ' ' && field.back() != ' ' && field.front() != '#')))
    return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string format_real(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace gridtriage::csv
