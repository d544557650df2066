#pragma once

#include <array>
#include <string>
#include <vector>

#include "hw/config.hpp"
#include "hw/report.hpp"
#include "hw/symbols.hpp"
#include "hw/verify.hpp"

namespace hw {

std::string tool_version();

/// spectral, gevrey, fourier, laguerre, arbitration, gr-identity
const std::vector<std::string>& suite_names();

/// Runs one verification suite. ConfigError for an unknown name or a config
/// the suite cannot use.
Report run_suite(const std::string& name, const RunConfig& cfg);

/// family,param_name,param,n,rho,value
Table eval_table(const SymbolSpec& spec, const std::vector<double>& rho_values, const QuadratureSpec& q = {});

/// alpha,abs_alpha,s,r,rho,lhs,bound_core,c_emp
Table estimate_table(const std::vector<EstimateReport>& reports);

/// The GR 3.541.1 sample set: 20 (mu, beta, nu) triples with beta in [0.5, 2],
/// nu in [-0.5, 3], mu - beta nu in [0.2 beta, 3 beta], from a fixed seed.
std::vector<std::array<double, 3>> gr_identity_samples(std::size_t count = 20);

}  // namespace hw
