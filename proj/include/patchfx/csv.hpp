#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace patchfx {

// Minimal RFC-4180-ish CSV support: comma separator, double-quote quoting
// with "" escapes, LF or CRLF line ends. Good enough for the telemetry
// exports this project consumes and byte-stable for the files it emits.

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // 1-based source line where each row starts (quoted fields can span lines).
  std::vector<std::int64_t> row_lines;

  // Column index by exact name; throws SchemaError if absent.
  std::size_t col(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text);

// One CSV-escaped field (quotes only when needed).
std::string csv_escape(const std::string& field);

// Canonical float formatting for emitted CSVs: shortest %.9g form, with
// "nan"/"inf" normalized so output never depends on libc spelling.
std::string format_double(double v);

std::string join_csv_row(const std::vector<std::string>& fields);

void write_csv(const std::string& path, const CsvTable& table);

// Strict scalar parses: entire token must consume, else nullopt.
std::optional<double> parse_double(const std::string& s);
std::optional<std::int64_t> parse_int(const std::string& s);

}  // namespace patchfx
