#include "hw/report.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include "json.hpp"

#include "hw/errors.hpp"

namespace hw {

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw DomainError("row width does not match the table header");
  rows.push_back(std::move(row));
}

std::string format_cell(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  const double v = std::get<double>(c);
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

// quotes fields holding separators
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

nlohmann::ordered_json to_json(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  const double v = std::get<double>(c);
  if (!std::isfinite(v)) return format_cell(c);
  return v;
}

}  // namespace

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(format_cell(row[i]));
    out << '\n';
  }
}

void write_csv_report(std::ostream& out, const Report& r, const EnvelopeMeta& meta) {
  out << "# tool_version: " << meta.tool_version << '\n';
  out << "# timestamp: " << meta.timestamp << '\n';
  out << "# suite: " << r.suite << '\n';
  out << "# status: " << (r.passed ? "pass" : "fail") << '\n';
  for (const auto& [k, v] : r.summary) out << "# " << k << ": " << format_cell(v) << '\n';
  write_csv(out, r.table);
}

void write_json_report(std::ostream& out, const Report& r, const EnvelopeMeta& meta) {
  nlohmann::ordered_json j;
  j["tool_version"] = meta.tool_version;
  j["suite"] = r.suite;
  j["timestamp"] = meta.timestamp;
  auto& cfg = j["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta.config) cfg[k] = v;
  j["passed"] = r.passed;
  auto& summary = j["summary"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.summary) summary[k] = to_json(v);
  auto& records = j["records"] = nlohmann::ordered_json::array();
  for (const auto& row : r.table.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) rec[r.table.columns[i]] = to_json(row[i]);
    records.push_back(std::move(rec));
  }
  out << j.dump(2) << '\n';
}

}  // namespace hw
