#include "hw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hw/errors.hpp"
#include "hw/parallel.hpp"

namespace hw {

std::vector<MultiIndex> two_slot_ladder(int A, int n) {
  if (A < 0) throw DomainError("ladder order must be >= 0");
  if (n < 1) throw DomainError("dimension n must be >= 1");
  std::vector<MultiIndex> out;
  for (int order = 0; order <= A; ++order)
    for (int a2 = 0; a2 <= order; ++a2) {
      std::vector<int> e(2 * n, 0);
      e[0] = order - a2;
      e[1] = a2;
      out.emplace_back(std::move(e));
    }
  return out;
}

double log_bound_core(const MultiIndex& alpha, double s, double r, double rho) {
  return 0.5 * (r + 1.0) * alpha.log_factorial() - (s + 0.5 * r * alpha.order()) * std::log(rho);
}

EstimateReport gevrey_scan(const SymbolSpec& spec, double r, int A, const std::vector<double>& rho_grid,
                           const QuadratureSpec& q) {
  spec.validate();
  double s = 0.0;
  if (const auto* f = std::get_if<family::InversePower>(&spec.family))
    s = f->s;
  else if (const auto* g = std::get_if<family::ConformalInverse>(&spec.family))
    s = g->s;
  else
    throw DomainError("gevrey_scan needs an inverse-power or conformal-inverse symbol");
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("gevrey_scan needs r in [0, 1]");
  if (rho_grid.empty()) throw DomainError("gevrey_scan needs a non-empty rho grid");
  for (double rho : rho_grid)
    if (!(rho > 0.0)) throw DomainError("gevrey_scan needs rho > 0");

  EstimateReport rep;
  rep.family = spec.name();
  rep.s = s;
  rep.r = r;
  rep.n = spec.n;
  const std::vector<MultiIndex> ladder = two_slot_ladder(A, spec.n);
  const std::size_t nr = rho_grid.size();
  rep.records.resize(ladder.size() * nr);

  parallel_for(rep.records.size(), [&](std::size_t cell) {
    EstimateRecord& rec = rep.records[cell];
    rec.alpha = ladder[cell / nr];
    rec.rho = rho_grid[cell % nr];
    const double log_bound = log_bound_core(rec.alpha, s, r, rec.rho);
    rec.bound_core = std::exp(log_bound);
    try {
      rec.lhs = std::abs(symbol_derivative(spec, rec.alpha, PhasePoint::on_axis(spec.n, rec.rho), q));
    } catch (const AccuracyError& e) {
      rec.lhs = std::numeric_limits<double>::quiet_NaN();
      rec.c_emp = rec.lhs;
      rec.note = e.what();
      return;
    }
    if (rec.lhs == 0.0) {
      rec.c_emp = 0.0;
      rec.note = "parity-zero";
      return;
    }
    rec.c_emp = std::exp((std::log(rec.lhs) - log_bound) / (rec.alpha.order() + 1.0));
  });

  rep.max_by_order.assign(A + 1, 0.0);
  for (const auto& rec : rep.records) {
    if (!std::isfinite(rec.c_emp)) {
      rep.all_finite = false;
      continue;
    }
    rep.max_c_emp = std::max(rep.max_c_emp, rec.c_emp);
    double& m = rep.max_by_order[rec.alpha.order()];
    m = std::max(m, rec.c_emp);
  }
  for (int a = 0; a < A; ++a)
    rep.max_increment = std::max(rep.max_increment, std::abs(rep.max_by_order[a + 1] - rep.max_by_order[a]));
  rep.bounded_increments = rep.all_finite && rep.max_increment <= rep.max_c_emp;
  return rep;
}

EstimateReport gevrey_scan(double s, double r, int A, const std::vector<double>& rho_grid, int n,
                           const QuadratureSpec& q) {
  return gevrey_scan(SymbolSpec{family::InversePower{s}, n}, r, A, rho_grid, q);
}

double symbol_fourier_transform(double s, double R, const QuadratureSpec& q) {
  if (!(R > 0.0)) throw DomainError("transform radius must be > 0");
  const SymbolSpec spec{family::ConformalInverse{s}, 1};
  const double quarter = 0.25 * R * R;
  const IntegralResult res = laplace_integral(
      spec,
      [quarter](double u) { return u <= 0.0 ? 0.0 : std::exp(std::log(std::numbers::pi / u) - quarter / u); },
      q);
  require_converged(res, "symbol_fourier_transform");
  return res.value;
}

namespace {

double macdonald_shape(double s, double R, const QuadratureSpec& q) {
  const double nu = 0.5 * (1.0 - s);
  return std::pow(R, -(1.0 - s)) * macdonald_k(nu, 0.25 * R * R, q);
}

}  // namespace

FourierCheckReport fourier_macdonald_check(double s, const std::vector<double>& radii, const QuadratureSpec& q) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("fourier check needs s in (0, 1]");
  if (radii.empty()) throw DomainError("fourier check needs at least one radius");
  FourierCheckReport rep;
  rep.s = s;
  rep.n = 1;
  rep.radii = radii;
  const std::size_t m = radii.size();
  rep.transform.resize(m);
  rep.shape.resize(m);
  parallel_for(m, [&](std::size_t i) {
    rep.transform[i] = symbol_fourier_transform(s, radii[i], q);
    rep.shape[i] = macdonald_shape(s, radii[i], q);
  });
  // minimizes sum (C shape/transform - 1)^2
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double t = rep.shape[i] / rep.transform[i];
    num += t;
    den += t * t;
  }
  rep.fitted_constant = num / den;
  rep.deviation.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    rep.deviation[i] = std::abs(rep.fitted_constant * rep.shape[i] - rep.transform[i]) / std::abs(rep.transform[i]);
    rep.max_deviation = std::max(rep.max_deviation, rep.deviation[i]);
  }
  const double nu = 0.5 * (1.0 - s);
  rep.derived_constant = conformal_constant(1, s, q) * std::sqrt(std::numbers::pi) *
                         std::exp(log_gamma(nu + 0.5) + nu * std::log(8.0));

  // b(rho = 1) = (2 pi)^-1 int C shape(R) J_0(R) R dR; shape ~ e^(-R^2/4).
  const double C = rep.fitted_constant;
  const IntegralResult back = integrate_finite(
      [&](double R) { return R <= 0.0 ? 0.0 : C * macdonald_shape(s, R, q) * std::cyl_bessel_j(0.0, R) * R; },
      0.0, 16.0, q);
  require_converged(back, "fourier round trip");
  rep.round_trip_value = back.value / (2.0 * std::numbers::pi);
  rep.symbol_value = conformal_inverse_symbol(s, 1.0, 1, q);
  rep.round_trip_error = std::abs(rep.round_trip_value - rep.symbol_value) / std::abs(rep.symbol_value);
  return rep;
}

std::string to_string(LaguerreConstant c) { return c == LaguerreConstant::Printed ? "printed" : "derived"; }

namespace {

void require_laguerre_domain(double a, double sigma) {
  if (!(sigma > 0.0 && a > sigma)) throw DomainError("Laguerre identity needs a > sigma > 0");
}

}  // namespace

double laguerre_closed_constant(double a, double sigma, LaguerreConstant c) {
  require_laguerre_domain(a, sigma);
  const double log_sqrt_pi = 0.5 * std::log(std::numbers::pi);
  if (c == LaguerreConstant::Printed)
    return std::exp((a + sigma) * std::log(2.0) + log_gamma(0.5 * (a - sigma)) - log_sqrt_pi - log_gamma(sigma));
  return 2.0 * std::exp(log_gamma(0.5 * (a - sigma) + 1.0) - log_sqrt_pi - log_gamma(a + 1.0) - log_gamma(sigma));
}

double laguerre_closed_form(double a, double sigma, double r, LaguerreConstant c, const QuadratureSpec& q) {
  if (!(r > 0.0)) throw DomainError("Laguerre identity needs r > 0");
  return laguerre_closed_constant(a, sigma, c) * std::pow(r, -a - 1.0 + sigma) *
         macdonald_k(0.5 * (a + 1.0 - sigma), 0.5 * r * r, q);
}

double laguerre_series_coefficient(double a, double sigma, int k) {
  require_laguerre_domain(a, sigma);
  if (k < 0) throw DomainError("coefficient index must be >= 0");
  return 2.0 * std::exp(log_gamma(0.5 * (2.0 * k + a + 2.0 - sigma)) - log_gamma(0.5 * (2.0 * k + a + 2.0 + sigma)) -
                        log_gamma(a + 1.0));
}

double laguerre_series(double a, double sigma, double r, int K) {
  require_laguerre_domain(a, sigma);
  if (K < 0) throw DomainError("truncation K must be >= 0");
  const std::vector<double> L = laguerre_all(K, a, r * r);
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) sum += laguerre_series_coefficient(a, sigma, k) * L[k];
  return sum * std::exp(-0.5 * r * r);
}

LaguerreCheck laguerre_expansion_check(double a, double sigma, const std::vector<double>& r_values, int K,
                                       LaguerreConstant c, const QuadratureSpec& q) {
  require_laguerre_domain(a, sigma);
  LaguerreCheck out;
  out.r_values = r_values;
  for (double r : r_values) {
    const double closed = laguerre_closed_form(a, sigma, r, c, q);
    const double series = laguerre_series(a, sigma, r, K);
    const double dev = std::abs(series - closed) / std::abs(closed);
    out.closed.push_back(closed);
    out.series.push_back(series);
    out.deviation.push_back(dev);
    out.max_deviation = std::max(out.max_deviation, dev);
  }
  return out;
}

CoefficientCheck laguerre_coefficient_check(double a, double sigma, int K, LaguerreConstant c,
                                            const QuadratureSpec& q) {
  require_laguerre_domain(a, sigma);
  if (K < 0) throw DomainError("truncation K must be >= 0");
  const double C = laguerre_closed_constant(a, sigma, c);
  const double nu = 0.5 * (a + 1.0 - sigma);
  CoefficientCheck out;
  out.projected.resize(K + 1);
  out.series.resize(K + 1);
  out.deviation.resize(K + 1);
  // G(sqrt x) x^a = C x^(sigma-1) [x^nu K_nu(x/2)]
  parallel_for(K + 1, [&](std::size_t kk) {
    const int k = static_cast<int>(kk);
    const Integrand g = [&](double x) {
      if (x > 1500.0) return 0.0;
      return std::exp(nu * std::log(x) - 0.5 * x) * macdonald_k(nu, 0.5 * x, q) * laguerre(k, a, x);
    };
    const IntegralResult res = integrate_power_weight(g, sigma, q);
    require_converged(res, "laguerre_coefficient_check");
    out.projected[kk] = C * std::exp(log_factorial(k) - log_gamma(k + a + 1.0)) * res.value;
    out.series[kk] = laguerre_series_coefficient(a, sigma, k);
    out.deviation[kk] = std::abs(out.projected[kk] - out.series[kk]) / std::abs(out.series[kk]);
  });
  out.max_deviation = *std::max_element(out.deviation.begin(), out.deviation.end());
  return out;
}

ArbitrationReport closed_form_arbitration(const std::vector<int>& m_values, const std::vector<double>& rho_values,
                                          double rel_tol, const QuadratureSpec& q) {
  for (int m : m_values)
    if (m < 1) throw DomainError("arbitration needs m >= 1");
  ArbitrationReport rep;
  rep.rel_tol = rel_tol;
  const CoeffFamily families[] = {CoeffFamily::BinomialFromProof, CoeffFamily::PaperPrinted};
  for (CoeffFamily f : families)
    for (int m : m_values)
      for (double rho : rho_values) rep.records.push_back({f, m, rho});
  parallel_for(rep.records.size(), [&](std::size_t i) {
    ArbitrationRecord& rec = rep.records[i];
    rec.closed = closed_even_symbol(rec.rho, rec.m, rec.family);
    rec.quadrature = inverse_power_symbol(1.0, rec.rho, 2 * rec.m, q);
    rec.abs_diff = std::abs(rec.closed - rec.quadrature);
    rec.rel_diff = rec.abs_diff / std::abs(rec.quadrature);
  });
  for (CoeffFamily f : families) {
    bool all = true;
    for (const auto& rec : rep.records)
      if (rec.family == f && !(rec.rel_diff <= rel_tol)) all = false;
    if (all) rep.matching.push_back(f);
  }
  return rep;
}

}  // namespace hw
