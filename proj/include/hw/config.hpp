#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hw/quadrature.hpp"
#include "hw/quantize.hpp"

namespace hw {

/// Run settings. The key names accepted by set() and in config files are the
/// field names.
struct RunConfig {
  int n = 1;
  double grid_L = 12.0;
  int grid_N = 512;
  double rel_tol = 1e-11;
  double abs_tol = 1e-14;
  int max_depth = 18;
  int base_nodes = 16;
  int spectral_K = 60;
  std::string output_dir = ".";
  std::string format = "csv";
  double tolerance = 0.0;  ///< 0 = suite default

  /// Parses and assigns one field; ConfigError on unknown key or bad value.
  void set(const std::string& key, const std::string& value);
  /// ConfigError when a field is out of range.
  void validate() const;

  QuadratureSpec quadrature() const;
  GridSpec grid() const;
  /// key, value pairs in declaration order, values as set() would accept them.
  std::vector<std::pair<std::string, std::string>> snapshot() const;
};

/// Applies "key = value" lines; '#' starts a comment, blank lines are skipped.
void apply_config_text(const std::string& text, RunConfig& cfg);

/// Reads a config file; ConfigError if it cannot be opened.
void apply_config_file(const std::string& path, RunConfig& cfg);

}  // namespace hw
