#include "hw/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hw/errors.hpp"

namespace hw {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* first = value.data();
  const char* last = first + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || value.empty())
    throw ConfigError("invalid value for " + key + ": '" + value + "'");
  return out;
}

// shortest text that parses back to v
std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "n") n = parse_number<int>(key, value);
  else if (key == "grid_L") grid_L = parse_number<double>(key, value);
  else if (key == "grid_N") grid_N = parse_number<int>(key, value);
  else if (key == "rel_tol") rel_tol = parse_number<double>(key, value);
  else if (key == "abs_tol") abs_tol = parse_number<double>(key, value);
  else if (key == "max_depth") max_depth = parse_number<int>(key, value);
  else if (key == "base_nodes") base_nodes = parse_number<int>(key, value);
  else if (key == "spectral_K") spectral_K = parse_number<int>(key, value);
  else if (key == "output_dir") output_dir = value;
  else if (key == "format") format = value;
  else if (key == "tolerance") tolerance = parse_number<double>(key, value);
  else throw ConfigError("unknown config key: " + key);
}

void RunConfig::validate() const {
  if (n < 1 || n > 16) throw ConfigError("n must lie in [1, 16]");
  if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
  if (spectral_K < 0 || spectral_K > 60) throw ConfigError("spectral_K must lie in [0, 60]");
  if (!(tolerance >= 0.0)) throw ConfigError("tolerance must be >= 0");
  if (output_dir.empty()) throw ConfigError("output_dir must not be empty");
  try {
    quadrature().validate();
    grid().validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

QuadratureSpec RunConfig::quadrature() const {
  QuadratureSpec q;
  q.rel_tol = rel_tol;
  q.abs_tol = abs_tol;
  q.max_depth = max_depth;
  q.base_nodes = base_nodes;
  return q;
}

GridSpec RunConfig::grid() const { return GridSpec{grid_L, grid_N}; }

std::vector<std::pair<std::string, std::string>> RunConfig::snapshot() const {
  return {{"n", std::to_string(n)},
          {"grid_L", format_double(grid_L)},
          {"grid_N", std::to_string(grid_N)},
          {"rel_tol", format_double(rel_tol)},
          {"abs_tol", format_double(abs_tol)},
          {"max_depth", std::to_string(max_depth)},
          {"base_nodes", std::to_string(base_nodes)},
          {"spectral_K", std::to_string(spectral_K)},
          {"output_dir", output_dir},
          {"format", format},
          {"tolerance", format_double(tolerance)}};
}

void apply_config_text(const std::string& text, RunConfig& cfg) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    cfg.set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(buf.str(), cfg);
}

}  // namespace hw
