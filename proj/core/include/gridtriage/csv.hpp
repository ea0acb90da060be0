#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gridtriage::csv {

// RFC 4180-style table: comma separated, double-quoted fields may contain
// commas, quotes ("") and newlines. Blank lines and lines starting with '#'
// are skipped. The first record is the header.
struct Table {
  std::string source;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;  // 1-based text line of each row

  // Column index of `name`, or nullopt.
  std::optional<std::size_t> find(std::string_view name) const;
  // Column index of `name`; throws SchemaError naming the field.
  std::size_t require(std::string_view name) const;
};

// Throws ParseError with line and column on malformed text or ragged rows.
Table parse(std::string_view text, std::string source);

Table read_file(const std::string& path);

// Typed field access with ParseError(source:line:column) on failure.
long long to_integer(const Table& t, std::size_t row, std::size_t col);
double to_real(const Table& t, std::size_t row, std::size_t col);

std::string quote_if_needed(std::string_view field);

// Shortest text that reads back to the same double.
std::string format_real(double value);

}  // namespace gridtriage::csv
