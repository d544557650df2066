#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "hw/quadrature.hpp"
#include "hw/special_fn.hpp"

namespace hw {

/// Phase-space point (x, xi) in R^n x R^n.
struct PhasePoint {
  std::vector<double> x;
  std::vector<double> xi;

  PhasePoint(std::vector<double> x_part, std::vector<double> xi_part);

  /// (sqrt(rho), 0, ..., 0; 0, ..., 0).
  static PhasePoint on_axis(int n, double rho);

  int dim() const noexcept { return static_cast<int>(x.size()); }
  /// |x|^2 + |xi|^2
  double rho() const noexcept;
  /// (x_1..x_n, xi_1..xi_n)
  std::vector<double> coordinates() const;
};

enum class CoeffFamily { PaperPrinted, BinomialFromProof };
std::string to_string(CoeffFamily family);

/// Spectral multiplier as a function of the eigenvalue lambda = 2k + n.
using Multiplier = std::function<double(double)>;

namespace multipliers {
Multiplier heat(double t);                ///< e^(-t lambda)
Multiplier inverse_power(double s);       ///< lambda^(-s)
Multiplier conformal_power(double s);     ///< Gamma((lambda+1+s)/2) / Gamma((lambda+1-s)/2)
Multiplier conformal_inverse(double s);   ///< reciprocal of conformal_power
Multiplier bounded_ratio(double s);       ///< conformal_power(s) * lambda^(-s)
Multiplier projection(int k, int n);      ///< indicator of lambda = 2k + n
}  // namespace multipliers

namespace family {
struct Heat {
  double t;
};
struct InversePower {
  double s;
};
struct ConformalInverse {
  double s;
};
struct ClosedEven {
  CoeffFamily coeff = CoeffFamily::BinomialFromProof;
};
struct Projection {
  int k;
};
struct SpectralSeries {
  Multiplier f;
  int K;
  int averaging = 0;  ///< passes of pairwise averaging of partial sums
  std::string label = "custom";
};
}  // namespace family

/// Which symbol, in which dimension.
struct SymbolSpec {
  using Family = std::variant<family::Heat, family::InversePower, family::ConformalInverse,
                              family::ClosedEven, family::Projection, family::SpectralSeries>;

  Family family;
  int n = 1;

  void validate() const;
  /// "heat", "inverse-power", "conformal-inverse", "closed-even", "projection", "spectral-series"
  std::string name() const;
  /// t, s, s, n/2, k or K.
  double parameter() const;
  std::string id() const;
  /// True for the families written as int_0^1 e^(-u rho) dmu(u).
  bool has_laplace_form() const;
};

/// (cosh t)^-n e^(-tanh(t) rho)
double heat_symbol(double t, double rho, int n);

/// Symbol of H^-s: (1/Gamma(s)) int_0^inf t^(s-1) (cosh t)^-n e^(-tanh(t) rho) dt.
double inverse_power_symbol(double s, double rho, int n, const QuadratureSpec& q = {});

/// Closed form on R^(2m) for the symbol of H^-1, with either coefficient family.
double closed_even_symbol(double rho, int m, CoeffFamily coeff);

/// int_0^1 e^(-a rho) a^(s-1) (1-a^2)^((n-s-1)/2) da, without the constant.
double conformal_inverse_raw(double s, double rho, int n, const QuadratureSpec& q = {});

/// Constant c_{n,s} that makes the quantized conformal symbol act on the ground
/// state by Gamma((n+1-s)/2) / Gamma((n+1+s)/2). Cached per (n, s).
double conformal_constant(int n, double s, const QuadratureSpec& q = {});

/// Symbol of H_s^-1.
double conformal_inverse_symbol(double s, double rho, int n, const QuadratureSpec& q = {});

/// Symbol of the k-th spectral projection: (-1)^k 2^n L_k^(n-1)(2 rho) e^(-rho).
double projection_symbol(int k, double rho, int n);

/// sum_{k<=K} f(2k+n) sigma_{P_k}(rho). With averaging = p > 0 the last
/// partial sums are averaged pairwise p times, which sums the alternating
/// tails of algebraic multipliers.
double spectral_series_symbol(const Multiplier& f, int K, double rho, int n, int averaging = 0);

/// Value of any SymbolSpec at radial coordinate rho.
double evaluate_symbol(const SymbolSpec& spec, double rho, const QuadratureSpec& q = {});

/// int g(u) dmu(u) for the measure of a Laplace-form family (heat, inverse
/// power, conformal inverse): the symbol is laplace_integral(e^(-u rho)).
IntegralResult laplace_integral(const SymbolSpec& spec, const Integrand& g,
                                const QuadratureSpec& q = {});

/// d^alpha of a Laplace-form symbol at p, |alpha| = 2n, through
/// d^alpha e^(-u|p|^2) = (-1)^|alpha| u^(|alpha|/2) H_alpha(sqrt(u) p) e^(-u|p|^2).
double symbol_derivative(const SymbolSpec& spec, const MultiIndex& alpha, const PhasePoint& p,
                         const QuadratureSpec& q = {});

/// d^alpha of the H^-s symbol.
double derivative_symbol(const MultiIndex& alpha, double s, const PhasePoint& p,
                         const QuadratureSpec& q = {});

/// Eigenvalue of the Weyl-quantized symbol on the k-th Hermite eigenspace,
/// from the exact action of each Gaussian e^(-u rho): (1-u)^k (1+u)^(-k-n).
double quantized_eigenvalue(const SymbolSpec& spec, int k, const QuadratureSpec& q = {});

/// The multiplier f(lambda) whose spectral operator has this symbol.
Multiplier matching_multiplier(const SymbolSpec& spec);

}  // namespace hw
