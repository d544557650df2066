#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hw/quadrature.hpp"
#include "hw/symbols.hpp"

namespace hw {

/// Periodic grid xi_i = -L + i h, i < N, h = 2L/N.
struct GridSpec {
  double L = 12.0;
  int N = 512;

  double spacing() const noexcept { return 2.0 * L / N; }
  double point(int i) const noexcept { return -L + i * spacing(); }
  /// L > 0, N even and >= 4.
  void validate() const;

  bool operator==(const GridSpec&) const = default;
};

struct GridFunction {
  GridSpec grid;
  std::vector<double> samples;

  GridFunction() = default;
  GridFunction(GridSpec g, std::vector<double> values);
  static GridFunction zeros(const GridSpec& g);
  static GridFunction sample(const GridSpec& g, const std::function<double(double)>& f);

  /// sqrt(h sum |phi_i|^2)
  double norm() const;
  /// h sum phi_i psi_i
  double inner(const GridFunction& other) const;
  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(double c);
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(double c, GridFunction a);

/// Dense N x N kernel K(xi_i, eta_j), row-major.
struct OperatorKernel {
  GridSpec grid;
  std::vector<double> matrix;
  std::string symbol_id;

  double at(int i, int j) const { return matrix[static_cast<std::size_t>(i) * grid.N + j]; }
  double max_asymmetry() const;
};

/// Radial symbol b(rho) on R^2.
using RadialSymbol = std::function<double(double)>;

/// K(xi, eta) = (2 pi)^-1 int e^(i(xi-eta)y) b(((xi+eta)/2)^2 + y^2) dy with the
/// y-integral taken by the trapezoid rule dual to the grid: spacing pi/L,
/// |y| <= pi/h. For inputs resolved by the grid this matches the continuous
/// operator to the accuracy of the grid itself.
OperatorKernel build_kernel(const RadialSymbol& b, const GridSpec& g, const std::string& id);

/// Kernel of Op(b) for a symbol family with n = 1. Quadrature failures are
/// rethrown as AccuracyError naming the midpoint.
OperatorKernel build_kernel(const SymbolSpec& spec, const GridSpec& g, const QuadratureSpec& q = {});

/// (Op phi)(xi_i) = h sum_j K_ij phi_j.
GridFunction apply_operator(const OperatorKernel& k, const GridFunction& phi);

/// Samples of the normalized Hermite function h_k.
GridFunction hermite_on_grid(int k, const GridSpec& g);

/// c_k = h sum_i phi(xi_i) h_k(xi_i), k = 0..K, K <= 60.
std::vector<double> hermite_coefficients(const GridFunction& phi, int K);

/// sum_{k<=K} f(2k+1) c_k h_k on the grid (n = 1).
GridFunction spectral_apply(const Multiplier& f, const GridFunction& phi, int K);

struct EigenResidual {
  double eigenvalue = 0.0;  ///< <Op Phi_k, Phi_k>_grid
  double residual = 0.0;    ///< ||Op Phi_k - eigenvalue Phi_k||
};

/// k <= 12.
EigenResidual eigen_residual(const OperatorKernel& kernel, int k);
EigenResidual eigen_residual(const SymbolSpec& spec, int k, const GridSpec& g,
                             const QuadratureSpec& q = {});

}  // namespace hw
