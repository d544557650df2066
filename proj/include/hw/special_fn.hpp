#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hw/quadrature.hpp"

namespace hw {

/// Multi-index alpha in N^d: indexes derivatives and Hermite tensor products.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  static MultiIndex zeros(std::size_t d);

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t j) const { return entries_[j]; }
  std::span<const int> entries() const noexcept { return entries_; }

  /// |alpha| = sum of entries.
  int order() const noexcept;
  /// alpha! = product of entry factorials; exact below |alpha| = 21.
  double factorial() const;
  double log_factorial() const;

  /// Copy with entry j shifted by delta (result must stay non-negative).
  MultiIndex shifted(std::size_t j, int delta) const;

  /// "a;b;c" form used in reports.
  std::string to_string() const;

  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<int> entries_;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// k!, exact for k <= 20.
double factorial(int k);
double log_factorial(int k);

/// Normalized Hermite function h_k(t) = (2^k k! sqrt(pi))^(-1/2) H_k(t) e^(-t^2/2),
/// by the normalized three-term recurrence.
double hermite_h(int k, double t);

/// h_0(t), ..., h_kmax(t).
std::vector<double> hermite_h_all(int k_max, double t);

/// Physicists' Hermite polynomial H_m(t).
double hermite_poly(int m, double t);

/// H_alpha(p) = prod_j H_{alpha_j}(p_j), no Gaussian factor.
double hermite_tensor(const MultiIndex& alpha, std::span<const double> p);

/// Phi_alpha(p) = prod_j h_{alpha_j}(p_j).
double phi_tensor(const MultiIndex& alpha, std::span<const double> p);

/// Generalized Laguerre polynomial L_k^a(r), a > -1.
double laguerre(int k, double a, double r);

/// L_0^a(r), ..., L_kmax^a(r).
std::vector<double> laguerre_all(int k_max, double a, double r);

/// Laguerre function L_k^a(r^2) e^(-r^2/2).
double laguerre_fn(int k, double a, double r);

/// e_j(a) = sum_{m<=j} a^m / m!, the Taylor polynomial of e^(+a).
double exp_taylor_poly(int j, double a);

/// (1/j!) int_0^a t^j e^(-t) dt = 1 - e^(-a) e_j(a).
double incomplete_gamma_ratio(int j, double a);

/// Macdonald function K_nu(r), r > 0, from the Sommerfeld integral after the
/// substitution t = (r/2) e^w (double-exponential decay in w).
double macdonald_k(double nu, double r, const QuadratureSpec& q = {});

/// K_nu(r) from the Poisson integral; cross-check route.
double macdonald_k_poisson(double nu, double r, const QuadratureSpec& q = {});

}  // namespace hw
