#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hw/config.hpp"
#include "hw/errors.hpp"
#include "hw/report.hpp"
#include "hw/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Common {
  std::string config_path;
  std::string out;
  std::map<std::string, std::string> overrides;
};

// Flags that mirror RunConfig keys.
void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "key = value config file");
  cmd->add_option("--out", c.out, "output file (default: stdout, or output_dir/<suite>.<format> for verify)");
  const std::vector<std::pair<std::string, std::string>> keys{
      {"--n", "n"},
      {"--grid-L", "grid_L"},
      {"--grid-N", "grid_N"},
      {"--rel-tol", "rel_tol"},
      {"--abs-tol", "abs_tol"},
      {"--max-depth", "max_depth"},
      {"--base-nodes", "base_nodes"},
      {"--spectral-K", "spectral_K"},
      {"--output-dir", "output_dir"},
      {"--format", "format"},
      {"--tolerance", "tolerance"}};
  for (const auto& [flag, key] : keys) {
    const std::string k = key;
    cmd->add_option_function<std::string>(
        flag, [&c, k](const std::string& v) { c.overrides[k] = v; }, "sets " + key);
  }
}

hw::RunConfig resolve(const Common& c) {
  hw::RunConfig cfg;
  if (!c.config_path.empty()) hw::apply_config_file(c.config_path, cfg);
  for (const auto& [k, v] : c.overrides) cfg.set(k, v);
  cfg.validate();
  return cfg;
}

hw::EnvelopeMeta meta_for(const hw::RunConfig& cfg) {
  return {hw::tool_version(), hw::utc_timestamp(), cfg.snapshot()};
}

// Writes to path, or stdout when path is empty.
void emit(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p);
  if (!f) throw hw::ConfigError("cannot write " + path);
  f << body;
}

std::string render(const hw::Report& r, const hw::RunConfig& cfg, bool plain_csv) {
  std::ostringstream os;
  if (cfg.format == "json")
    hw::write_json_report(os, r, meta_for(cfg));
  else if (plain_csv)
    hw::write_csv(os, r.table);
  else
    hw::write_csv_report(os, r, meta_for(cfg));
  return os.str();
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw hw::ConfigError("not a number: '" + item + "'");
    }
  }
  return out;
}

// "x1,..,xn/xi1,..,xin" -> rho
double point_rho(const std::string& text) {
  const auto semi = text.find('/');
  if (semi == std::string::npos) throw hw::ConfigError("phase point must look like x1,../xi1,..");
  return hw::PhasePoint(parse_list(text.substr(0, semi)), parse_list(text.substr(semi + 1))).rho();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl symbols of the Hermite operator: evaluation, tables and verification suites"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hw::tool_version());

  Common common;

  auto* eval = app.add_subcommand("eval", "evaluate a symbol at rho values or phase points");
  std::string family;
  double t = 1.0, s = 1.0;
  int k = 0;
  std::string coeff = "binomial";
  std::vector<std::string> rho_text, points;
  eval->add_option("--family", family, "heat|inverse-power|conformal-inverse|closed-even|projection")->required();
  eval->add_option("--t", t, "heat time");
  eval->add_option("--s", s, "order in (0, 1]");
  eval->add_option("--k", k, "projection index");
  eval->add_option("--coeff", coeff, "closed-even coefficients: binomial|printed");
  eval->add_option("--rho", rho_text, "rho values, comma separated")->delimiter(',');
  eval->add_option("--point", points, "phase point x1,../xi1,.. (repeatable)");
  add_common(eval, common);

  auto* verify = app.add_subcommand("verify", "run a verification suite and write its report");
  std::string suite;
  verify->add_option("suite", suite, "spectral|gevrey|fourier|laguerre|arbitration|gr-identity")->required();
  add_common(verify, common);

  auto* table = app.add_subcommand("table", "derivative estimate table (CSV)");
  std::string table_family = "inverse-power";
  double table_s = 1.0, table_r = 1.0;
  int max_order = 4;
  std::vector<double> table_rho{1, 4, 16, 64, 100};
  table->add_option("--family", table_family, "inverse-power|conformal-inverse");
  table->add_option("--s", table_s, "order in (0, 1]");
  table->add_option("--r", table_r, "Gevrey parameter in [0, 1]");
  table->add_option("--max-order", max_order, "largest |alpha| of the two-slot ladder");
  table->add_option("--rho", table_rho, "rho grid, comma separated")->delimiter(',');
  add_common(table, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    const hw::RunConfig cfg = resolve(common);
    const hw::QuadratureSpec q = cfg.quadrature();

    if (*eval) {
      hw::SymbolSpec spec{hw::family::Heat{t}, cfg.n};
      if (family == "heat") spec.family = hw::family::Heat{t};
      else if (family == "inverse-power") spec.family = hw::family::InversePower{s};
      else if (family == "conformal-inverse") spec.family = hw::family::ConformalInverse{s};
      else if (family == "projection") spec.family = hw::family::Projection{k};
      else if (family == "closed-even") {
        if (coeff != "binomial" && coeff != "printed") throw hw::ConfigError("--coeff must be binomial or printed");
        spec.family = hw::family::ClosedEven{coeff == "printed" ? hw::CoeffFamily::PaperPrinted
                                                                : hw::CoeffFamily::BinomialFromProof};
      } else
        throw hw::ConfigError("unknown family: " + family);
      std::vector<double> rhos;
      for (const auto& r : rho_text) {
        const auto v = parse_list(r);
        rhos.insert(rhos.end(), v.begin(), v.end());
      }
      for (const auto& p : points) rhos.push_back(point_rho(p));
      if (rhos.empty()) throw hw::ConfigError("eval needs --rho or --point");
      hw::Report r;
      r.suite = "eval";
      r.table = hw::eval_table(spec, rhos, q);
      emit(common.out, render(r, cfg, true));
      return kExitPass;
    }

    if (*table) {
      hw::SymbolSpec spec{hw::family::InversePower{table_s}, cfg.n};
      if (table_family == "conformal-inverse") spec.family = hw::family::ConformalInverse{table_s};
      else if (table_family != "inverse-power") throw hw::ConfigError("unknown family: " + table_family);
      hw::Report r;
      r.suite = "table";
      r.table = hw::estimate_table({hw::gevrey_scan(spec, table_r, max_order, table_rho, q)});
      emit(common.out, render(r, cfg, true));
      return kExitPass;
    }

    const hw::Report report = hw::run_suite(suite, cfg);
    const std::string path =
        common.out.empty() ? (std::filesystem::path(cfg.output_dir) / (suite + "." + cfg.format)).string() : common.out;
    emit(path, render(report, cfg, false));
    std::cout << suite << ": " << (report.passed ? "pass" : "fail");
    for (const auto& [key, v] : report.summary) std::cout << "  " << key << "=" << hw::format_cell(v);
    std::cout << "\nreport: " << path << '\n';
    return report.passed ? kExitPass : kExitFail;
  } catch (const hw::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const hw::DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
