#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hw {

using Integrand = std::function<double(double)>;

/// Tolerances and limits that govern every integral in the library.
struct QuadratureSpec {
  double rel_tol = 1e-11;
  double abs_tol = 1e-14;
  int max_depth = 18;   ///< bisection depth limit per panel
  int base_nodes = 16;  ///< Gauss-Legendre order of one panel, in [8, 64]
  /// Geometric levels of the starting mesh toward the left end of each
  /// finite interval; resolves mass concentrated near that end.
  int grading = 0;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

struct IntegralResult {
  double value = 0.0;
  double err_estimate = 0.0;
  long evaluations = 0;
  /// err_estimate <= max(abs_tol, rel_tol * |value|).
  bool converged = true;
  /// Refinement stopped because the estimate reached the rounding floor of
  /// the integrand magnitude (cancelling integrands).
  bool roundoff_limited = false;

  bool acceptable() const noexcept { return converged || roundoff_limited; }

  /// Accumulates a piece of a split integral.
  IntegralResult& operator+=(const IntegralResult& other);
};

/// Throws AccuracyError naming `context` unless the result is acceptable.
void require_converged(const IntegralResult& result, const std::string& context);

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// Gauss-Legendre rule of order n (8 <= n <= 64), computed once per process.
const GaussRule& gauss_legendre(int n);

/// Globally adaptive Gauss-Legendre on [a, b]. The panel with the largest
/// error is bisected until the total estimate meets the tolerance; panels at
/// max_depth are frozen. Deterministic for a given integrand.
IntegralResult integrate_finite(const Integrand& f, double a, double b,
                                const QuadratureSpec& q = {});

/// Integral over [0, 1] of u^(p-1) (1-u)^(q_exp-1) f(u), p, q_exp > 0.
/// Both algebraic endpoint weights are removed by power substitutions.
IntegralResult integrate_jacobi(const Integrand& f, double p, double q_exp,
                                const QuadratureSpec& q = {});

/// Integral of f over [a, inf) through t = a + v/(1-v). f must decay at least
/// exponentially and evaluate to 0 (not NaN) at very large t.
IntegralResult integrate_semi_infinite(const Integrand& f, double a,
                                       const QuadratureSpec& q = {});

/// Integral over [0, inf) of t^(p-1) g(t), p > 0.
IntegralResult integrate_power_weight(const Integrand& g, double p,
                                      const QuadratureSpec& q = {});

/// Integral over [0, 1] of F(u) (1-u^2)^(n/2-1), i.e. the integral over
/// [0, inf) of F(tanh t) (cosh t)^-n. Odd n goes through u = sin(theta).
IntegralResult integrate_mehler(const Integrand& F, int n,
                                const QuadratureSpec& q = {});

/// Integral over [0, inf) of t^(s-1) g(t) for 0 < s <= 1: [0,1] with
/// t = v^(1/s), [1, inf) with the rational tail map.
IntegralResult integrate_power_endpoint(const Integrand& g, double s,
                                        const QuadratureSpec& q = {});

struct GrIdentityCheck {
  double lhs = 0.0;             ///< quadrature of e^(-mu t) sinh^nu(beta t)
  double rhs = 0.0;             ///< Gamma-function side, including 1/beta
  double abs_diff = 0.0;
  double rhs_without_beta = 0.0;  ///< Gamma side with the 1/beta factor dropped
};

/// Integral over [0, inf) of e^(-mu t) sinh^nu(beta t) against
/// 2^(-nu-1) Gamma(mu/(2beta) - nu/2) Gamma(nu+1) / (beta Gamma(mu/(2beta) + nu/2 + 1)).
/// Requires beta > 0, nu > -1, mu > beta nu.
GrIdentityCheck gr_identity_check(double mu, double beta, double nu,
                                  const QuadratureSpec& q = {});

}  // namespace hw
