#pragma once

#include <string>
#include <vector>

#include "hw/quadrature.hpp"
#include "hw/special_fn.hpp"
#include "hw/symbols.hpp"

namespace hw {

struct EstimateRecord {
  MultiIndex alpha;
  double rho = 0.0;
  double lhs = 0.0;         ///< |d^alpha b|
  double bound_core = 0.0;  ///< (alpha!)^((r+1)/2) rho^(-s-(r/2)|alpha|)
  double c_emp = 0.0;       ///< (lhs / bound_core)^(1/(|alpha|+1)); 0 when lhs vanishes
  std::string note;         ///< "parity-zero" or a quadrature failure
};

struct EstimateReport {
  std::string family;  ///< symbol family scanned
  double s = 0.0;
  double r = 0.0;
  int n = 1;
  std::vector<EstimateRecord> records;  ///< ladder order x rho order
  double max_c_emp = 0.0;
  /// max over |alpha| of C_emp, index = |alpha|
  std::vector<double> max_by_order;
  /// largest |max_by_order[a+1] - max_by_order[a]|
  double max_increment = 0.0;
  bool all_finite = true;
  /// increments stay below the largest C_emp seen
  bool bounded_increments = true;
};

/// All two-slot multi-indices (a1, a2, 0, ...) of length 2n with a1 + a2 <= A,
/// ordered by |alpha| and then by a2.
std::vector<MultiIndex> two_slot_ladder(int A, int n);

/// Derivative scan of a Laplace-form symbol at (sqrt(rho) e_1, 0). The symbol
/// must be an InversePower or ConformalInverse family; its order is the s of
/// the bound.
EstimateReport gevrey_scan(const SymbolSpec& spec, double r, int A, const std::vector<double>& rho_grid,
                           const QuadratureSpec& q = {});

/// Shortcut for the H^-s symbol.
EstimateReport gevrey_scan(double s, double r, int A, const std::vector<double>& rho_grid, int n,
                           const QuadratureSpec& q = {});

/// Bound exponent terms for one cell, in logs.
double log_bound_core(const MultiIndex& alpha, double s, double r, double rho);

struct FourierCheckReport {
  double s = 0.0;
  int n = 1;
  std::vector<double> radii;
  std::vector<double> transform;   ///< 2-D Fourier transform of the symbol at each radius
  std::vector<double> shape;       ///< R^-(n-s) K_((n-s)/2)(R^2/4)
  std::vector<double> deviation;   ///< |C shape - transform| / |transform|
  double fitted_constant = 0.0;
  double derived_constant = 0.0;   ///< closed form of the constant
  double max_deviation = 0.0;
  double round_trip_value = 0.0;   ///< inverse transform of the fitted form at rho = 1
  double symbol_value = 0.0;       ///< the symbol at rho = 1
  double round_trip_error = 0.0;   ///< relative
};

/// Transform of the conformal inverse symbol on R^2 (n = 1), built from the
/// Gaussian transforms (pi/a) e^(-R^2/(4a)) of its Laplace representation.
double symbol_fourier_transform(double s, double R, const QuadratureSpec& q = {});

FourierCheckReport fourier_macdonald_check(double s, const std::vector<double>& radii,
                                           const QuadratureSpec& q = {});

enum class LaguerreConstant { Printed, Derived };
std::string to_string(LaguerreConstant c);

/// Prefactor of r^(-a-1+sigma) K_((a+1-sigma)/2)(r^2/2) in the closed form of G.
/// Printed: 2^(a+sigma) Gamma((a-sigma)/2) / (sqrt(pi) Gamma(sigma)).
/// Derived: 2 Gamma((a-sigma)/2 + 1) / (sqrt(pi) Gamma(a+1) Gamma(sigma)).
double laguerre_closed_constant(double a, double sigma, LaguerreConstant c);

/// Closed Macdonald form of G_{a,sigma}(r).
double laguerre_closed_form(double a, double sigma, double r, LaguerreConstant c,
                            const QuadratureSpec& q = {});

/// 2/Gamma(a+1) sum_{k<=K} Gamma((2k+a+2-sigma)/2)/Gamma((2k+a+2+sigma)/2) L_k^a(r^2) e^(-r^2/2).
double laguerre_series(double a, double sigma, double r, int K);

/// Series coefficient of index k.
double laguerre_series_coefficient(double a, double sigma, int k);

struct LaguerreCheck {
  std::vector<double> r_values;
  std::vector<double> closed;
  std::vector<double> series;
  std::vector<double> deviation;  ///< relative
  double max_deviation = 0.0;
};

/// Pointwise comparison of the truncated series with the closed form.
/// Requires a > sigma > 0 and r > 0.
LaguerreCheck laguerre_expansion_check(double a, double sigma, const std::vector<double>& r_values, int K,
                                       LaguerreConstant c = LaguerreConstant::Printed,
                                       const QuadratureSpec& q = {});

struct CoefficientCheck {
  std::vector<double> projected;  ///< k!/Gamma(k+a+1) int G(sqrt x) L_k^a(x) e^(-x/2) x^a dx
  std::vector<double> series;     ///< laguerre_series_coefficient
  std::vector<double> deviation;  ///< relative
  double max_deviation = 0.0;
};

/// Projects the closed form onto L_k^a, k <= K, and compares with the series
/// coefficients. Convergence-free counterpart of the pointwise check.
CoefficientCheck laguerre_coefficient_check(double a, double sigma, int K, LaguerreConstant c,
                                            const QuadratureSpec& q = {});

struct ArbitrationRecord {
  CoeffFamily family;
  int m = 1;
  double rho = 0.0;
  double closed = 0.0;
  double quadrature = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
};

struct ArbitrationReport {
  std::vector<ArbitrationRecord> records;
  /// Families whose every record matches to rel_tol.
  std::vector<CoeffFamily> matching;
  double rel_tol = 1e-10;
};

/// closed_even_symbol against quadrature of the H^-1 symbol in n = 2m.
ArbitrationReport closed_form_arbitration(const std::vector<int>& m_values, const std::vector<double>& rho_values,
                                          double rel_tol = 1e-10, const QuadratureSpec& q = {});

}  // namespace hw
