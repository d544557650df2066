#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hw {

using Cell = std::variant<std::string, double, long long>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Appends a row; DomainError if its width differs from the header.
  void add(std::vector<Cell> row);
};

struct Report {
  std::string suite;
  Table table;
  std::vector<std::pair<std::string, Cell>> summary;
  bool passed = true;
};

struct EnvelopeMeta {
  std::string tool_version;
  std::string timestamp;
  std::vector<std::pair<std::string, std::string>> config;
};

/// %.17g; nan and inf spelled out.
std::string format_cell(const Cell& c);

/// UTC, ISO 8601.
std::string utc_timestamp();

/// Header and rows only.
void write_csv(std::ostream& out, const Table& t);

/// '#' metadata lines (version, timestamp, suite, status, summary), then write_csv.
void write_csv_report(std::ostream& out, const Report& r, const EnvelopeMeta& meta);

/// {tool_version, suite, timestamp, config, passed, summary, records}.
void write_json_report(std::ostream& out, const Report& r, const EnvelopeMeta& meta);

}  // namespace hw
