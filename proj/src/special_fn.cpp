#include "hw/special_fn.hpp"

#include <math.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "hw/errors.hpp"

namespace hw {

namespace {

constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (std::uint64_t k = 1; k < f.size(); ++k) f[k] = f[k - 1] * k;
  return f;
}();

const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

void require_dims(const MultiIndex& alpha, std::span<const double> p) {
  if (alpha.size() != p.size())
    throw DomainError("multi-index length " + std::to_string(alpha.size()) +
                      " does not match point dimension " + std::to_string(p.size()));
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) throw DomainError("multi-index entries must be non-negative");
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zeros(std::size_t d) { return MultiIndex(std::vector<int>(d, 0)); }

int MultiIndex::order() const noexcept {
  int total = 0;
  for (int e : entries_) total += e;
  return total;
}

double MultiIndex::factorial() const {
  if (order() <= 20) {
    std::uint64_t prod = 1;
    for (int e : entries_) prod *= kFactorials[e];
    return static_cast<double>(prod);
  }
  return std::exp(log_factorial());
}

double MultiIndex::log_factorial() const {
  double total = 0.0;
  for (int e : entries_) total += hw::log_factorial(e);
  return total;
}

MultiIndex MultiIndex::shifted(std::size_t j, int delta) const {
  std::vector<int> e = entries_;
  e.at(j) += delta;
  return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) out += ';';
    out += std::to_string(entries_[j]);
  }
  return out;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double factorial(int k) {
  if (k < 0) throw DomainError("factorial of a negative integer");
  if (k <= 20) return static_cast<double>(kFactorials[k]);
  return std::exp(log_gamma(k + 1.0));
}

double log_factorial(int k) {
  if (k < 0) throw DomainError("factorial of a negative integer");
  if (k <= 20) return std::log(static_cast<double>(kFactorials[k]));
  return log_gamma(k + 1.0);
}

std::vector<double> hermite_h_all(int k_max, double t) {
  if (k_max < 0) throw DomainError("Hermite order must be non-negative");
  std::vector<double> h(k_max + 1);
  h[0] = kPiQuarter * std::exp(-0.5 * t * t);
  if (k_max >= 1) h[1] = std::numbers::sqrt2 * t * h[0];
  for (int k = 1; k < k_max; ++k)
    h[k + 1] = std::sqrt(2.0 / (k + 1)) * t * h[k] - std::sqrt(double(k) / (k + 1)) * h[k - 1];
  return h;
}

double hermite_h(int k, double t) { return hermite_h_all(k, t)[k]; }

double hermite_poly(int m, double t) {
  if (m < 0) throw DomainError("Hermite order must be non-negative");
  double prev = 1.0;
  if (m == 0) return prev;
  double cur = 2.0 * t;
  for (int k = 1; k < m; ++k) {
    const double next = 2.0 * t * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_tensor(const MultiIndex& alpha, std::span<const double> p) {
  require_dims(alpha, p);
  double prod = 1.0;
  for (std::size_t j = 0; j < p.size(); ++j) prod *= hermite_poly(alpha[j], p[j]);
  return prod;
}

double phi_tensor(const MultiIndex& alpha, std::span<const double> p) {
  require_dims(alpha, p);
  double prod = 1.0;
  for (std::size_t j = 0; j < p.size(); ++j) prod *= hermite_h(alpha[j], p[j]);
  return prod;
}

std::vector<double> laguerre_all(int k_max, double a, double r) {
  if (k_max < 0) throw DomainError("Laguerre degree must be non-negative");
  if (!(a > -1.0)) throw DomainError("Laguerre order must exceed -1");
  std::vector<double> L(k_max + 1);
  L[0] = 1.0;
  if (k_max >= 1) L[1] = 1.0 + a - r;
  for (int k = 1; k < k_max; ++k)
    L[k + 1] = ((2.0 * k + 1.0 + a - r) * L[k] - (k + a) * L[k - 1]) / (k + 1.0);
  return L;
}

double laguerre(int k, double a, double r) { return laguerre_all(k, a, r)[k]; }

double laguerre_fn(int k, double a, double r) {
  return laguerre(k, a, r * r) * std::exp(-0.5 * r * r);
}

double exp_taylor_poly(int j, double a) {
  if (j < 0) throw DomainError("Taylor degree must be non-negative");
  double e = 1.0;
  for (int m = j; m >= 1; --m) e = 1.0 + e * a / m;
  return e;
}

double incomplete_gamma_ratio(int j, double a) {
  if (j < 0) throw DomainError("incomplete_gamma_ratio requires j >= 0");
  if (!(a >= 0.0)) throw DomainError("incomplete_gamma_ratio requires a >= 0");
  if (a == 0.0) return 0.0;
  if (a < j + 1.0) {
    // Lower tail: e^-a sum_{m>j} a^m/m!, all terms positive.
    const double lead = std::exp((j + 1.0) * std::log(a) - a - log_factorial(j + 1));
    double term = 1.0, sum = 1.0;
    for (int m = j + 2; term > 1e-17 * sum; ++m) {
      term *= a / m;
      sum += term;
    }
    return lead * sum;
  }
  // Upper tail e^-a e_j(a), summed downward from the largest term.
  const double top = std::exp(j * std::log(a) - a - log_factorial(j));
  double term = 1.0, sum = 1.0;
  for (int m = j; m >= 1; --m) {
    term *= m / a;
    sum += term;
  }
  return 1.0 - top * sum;
}

double macdonald_k(double nu, double r, const QuadratureSpec& q) {
  if (!(r > 0.0)) throw DomainError("macdonald_k requires r > 0");
  const double v = std::abs(nu);
  // K_nu(r) = int_0^inf exp(-r cosh w) cosh(nu w) dw.
  auto log_core = [&](double w) { return v * w - r * std::cosh(w); };
  const double w_peak = std::asinh(v / r);
  const double log_peak = log_core(w_peak);
  double w_max = w_peak + 1.0;
  while (log_core(w_max) > log_peak - 60.0) w_max += std::max(1.0, 0.5 * w_max);

  const Integrand scaled = [&](double w) {
    return std::exp(log_core(w) - log_peak) * 0.5 * (1.0 + std::exp(-2.0 * v * w));
  };
  IntegralResult body = integrate_finite(scaled, 0.0, w_peak, q);
  body += integrate_finite(scaled, w_peak, w_max, q);
  require_converged(body, "macdonald_k");
  return std::exp(log_peak) * body.value;
}

double macdonald_k_poisson(double nu, double r, const QuadratureSpec& q) {
  if (!(r > 0.0)) throw DomainError("macdonald_k_poisson requires r > 0");
  const double v = std::abs(nu);
  const Integrand g = [&](double t) { return std::exp(-t + (v - 0.5) * std::log1p(t / (2.0 * r))); };
  const IntegralResult body = integrate_power_weight(g, v + 0.5, q);
  require_converged(body, "macdonald_k_poisson");
  const double log_pref = 0.5 * std::log(std::numbers::pi / 2.0) - log_gamma(v + 0.5) -
                          0.5 * std::log(r) - r;
  return std::exp(log_pref) * body.value;
}

}  // namespace hw
