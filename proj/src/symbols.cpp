#include "hw/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "hw/errors.hpp"

namespace hw {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_s(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("symbol order s must lie in (0, 1]");
}

void require_n(int n) {
  if (n < 1) throw DomainError("dimension n must be >= 1");
}

void require_rho(double rho) {
  if (!(rho >= 0.0)) throw DomainError("rho must be >= 0");
}

IntegralResult scaled(IntegralResult r, double factor) {
  r.value *= factor;
  r.err_estimate *= std::abs(factor);
  return r;
}

double gamma_ratio(double a, double b) { return std::exp(log_gamma(a) - log_gamma(b)); }

// e^(-u rho) lives on u < ~1/rho; start the mesh there.
QuadratureSpec graded_for(const QuadratureSpec& q, double rho) {
  QuadratureSpec g = q;
  if (rho > 2.0) g.grading = std::max(g.grading, static_cast<int>(std::ceil(std::log2(rho))) + 1);
  return g;
}

}  // namespace

PhasePoint::PhasePoint(std::vector<double> x_part, std::vector<double> xi_part)
    : x(std::move(x_part)), xi(std::move(xi_part)) {
  if (x.size() != xi.size() || x.empty())
    throw DomainError("phase point needs x and xi of equal, non-zero length");
}

PhasePoint PhasePoint::on_axis(int n, double rho) {
  require_n(n);
  require_rho(rho);
  std::vector<double> x(n, 0.0), xi(n, 0.0);
  x[0] = std::sqrt(rho);
  return PhasePoint(std::move(x), std::move(xi));
}

double PhasePoint::rho() const noexcept {
  double r = 0.0;
  for (double v : x) r += v * v;
  for (double v : xi) r += v * v;
  return r;
}

std::vector<double> PhasePoint::coordinates() const {
  std::vector<double> c = x;
  c.insert(c.end(), xi.begin(), xi.end());
  return c;
}

std::string to_string(CoeffFamily family) {
  return family == CoeffFamily::PaperPrinted ? "PaperPrinted" : "BinomialFromProof";
}

namespace multipliers {

Multiplier heat(double t) {
  return [t](double lambda) { return std::exp(-t * lambda); };
}

Multiplier inverse_power(double s) {
  return [s](double lambda) { return std::pow(lambda, -s); };
}

Multiplier conformal_power(double s) {
  return [s](double lambda) { return gamma_ratio(0.5 * (lambda + 1.0 + s), 0.5 * (lambda + 1.0 - s)); };
}

Multiplier conformal_inverse(double s) {
  return [s](double lambda) { return gamma_ratio(0.5 * (lambda + 1.0 - s), 0.5 * (lambda + 1.0 + s)); };
}

Multiplier bounded_ratio(double s) {
  return [s](double lambda) {
    return gamma_ratio(0.5 * (lambda + 1.0 + s), 0.5 * (lambda + 1.0 - s)) * std::pow(lambda, -s);
  };
}

Multiplier projection(int k, int n) {
  const double target = 2.0 * k + n;
  return [target](double lambda) { return lambda == target ? 1.0 : 0.0; };
}

}  // namespace multipliers

void SymbolSpec::validate() const {
  require_n(n);
  std::visit(Overloaded{
                 [](const family::Heat& f) {
                   if (!(f.t > 0.0)) throw DomainError("heat symbol requires t > 0");
                 },
                 [](const family::InversePower& f) { require_s(f.s); },
                 [](const family::ConformalInverse& f) { require_s(f.s); },
                 [this](const family::ClosedEven&) {
                   if (n % 2 != 0) throw DomainError("closed-even symbol requires even n");
                 },
                 [](const family::Projection& f) {
                   if (f.k < 0) throw DomainError("projection index must be >= 0");
                 },
                 [](const family::SpectralSeries& f) {
                   if (!f.f) throw DomainError("spectral series needs a multiplier");
                   if (f.K < 0 || f.averaging < 0 || f.averaging > f.K)
                     throw DomainError("spectral series needs 0 <= averaging <= K");
                 },
             },
             family);
}

std::string SymbolSpec::name() const {
  return std::visit(Overloaded{
                        [](const family::Heat&) { return std::string("heat"); },
                        [](const family::InversePower&) { return std::string("inverse-power"); },
                        [](const family::ConformalInverse&) { return std::string("conformal-inverse"); },
                        [](const family::ClosedEven&) { return std::string("closed-even"); },
                        [](const family::Projection&) { return std::string("projection"); },
                        [](const family::SpectralSeries&) { return std::string("spectral-series"); },
                    },
                    family);
}

double SymbolSpec::parameter() const {
  return std::visit(Overloaded{
                        [](const family::Heat& f) { return f.t; },
                        [](const family::InversePower& f) { return f.s; },
                        [](const family::ConformalInverse& f) { return f.s; },
                        [this](const family::ClosedEven&) { return n / 2.0; },
                        [](const family::Projection& f) { return double(f.k); },
                        [](const family::SpectralSeries& f) { return double(f.K); },
                    },
                    family);
}

std::string SymbolSpec::id() const {
  std::ostringstream os;
  os << name() << '(';
  std::visit(Overloaded{
                 [&](const family::Heat& f) { os << "t=" << f.t; },
                 [&](const family::InversePower& f) { os << "s=" << f.s; },
                 [&](const family::ConformalInverse& f) { os << "s=" << f.s; },
                 [&](const family::ClosedEven& f) { os << to_string(f.coeff); },
                 [&](const family::Projection& f) { os << "k=" << f.k; },
                 [&](const family::SpectralSeries& f) { os << f.label << ",K=" << f.K; },
             },
             family);
  os << ",n=" << n << ')';
  return os.str();
}

bool SymbolSpec::has_laplace_form() const {
  return std::holds_alternative<family::Heat>(family) ||
         std::holds_alternative<family::InversePower>(family) ||
         std::holds_alternative<family::ConformalInverse>(family);
}

double heat_symbol(double t, double rho, int n) {
  if (!(t > 0.0)) throw DomainError("heat symbol requires t > 0");
  require_n(n);
  require_rho(rho);
  return std::pow(1.0 / std::cosh(t), n) * std::exp(-std::tanh(t) * rho);
}

IntegralResult laplace_integral(const SymbolSpec& spec, const Integrand& g, const QuadratureSpec& q) {
  spec.validate();
  const int n = spec.n;
  return std::visit(
      Overloaded{
          [&](const family::Heat& f) {
            IntegralResult r;
            r.value = std::pow(1.0 / std::cosh(f.t), n) * g(std::tanh(f.t));
            r.evaluations = 1;
            return r;
          },
          [&](const family::InversePower& f) {
            if (f.s == 1.0) return integrate_mehler(g, n, q);
            const Integrand in_t = [&](double t) {
              const double sech = 1.0 / std::cosh(t);
              return sech == 0.0 ? 0.0 : std::pow(sech, n) * g(std::tanh(t));
            };
            return scaled(integrate_power_endpoint(in_t, f.s, q), std::exp(-log_gamma(f.s)));
          },
          [&](const family::ConformalInverse& f) {
            const double c = conformal_constant(n, f.s, q);
            const double e = 0.5 * (n - f.s - 1.0);
            const Integrand body = [&](double a) { return std::pow(1.0 + a, e) * g(a); };
            return scaled(integrate_jacobi(body, f.s, e + 1.0, q), c);
          },
          [&](const auto&) -> IntegralResult {
            throw DomainError("symbol family " + spec.name() + " has no Laplace form");
          },
      },
      spec.family);
}

double inverse_power_symbol(double s, double rho, int n, const QuadratureSpec& q) {
  require_rho(rho);
  const SymbolSpec spec{family::InversePower{s}, n};
  const IntegralResult r =
      laplace_integral(spec, [rho](double u) { return std::exp(-u * rho); }, graded_for(q, rho));
  require_converged(r, "inverse_power_symbol");
  return r.value;
}

double closed_even_symbol(double rho, int m, CoeffFamily coeff) {
  if (m < 1) throw DomainError("closed_even_symbol requires m >= 1");
  require_rho(rho);
  double total = 0.0;
  for (int j = 0; j < m; ++j) {
    const double log_c = coeff == CoeffFamily::PaperPrinted
                             ? log_factorial(m + j - 1) - log_factorial(m - 1) - log_factorial(j)
                             : log_factorial(m - 1) - log_factorial(j) - log_factorial(m - 1 - j);
    // int_0^1 t^(2j) e^(-rho t) dt = (2j)! [1 - e^-rho e_2j(rho)] rho^(-2j-1)
    double moment = 0.0;
    if (rho < 1e-3) {
      double term = 1.0;
      for (int i = 0; i < 40; ++i) {
        moment += term / (2.0 * j + 1.0 + i);
        term *= -rho / (i + 1.0);
      }
    } else {
      moment = std::exp(log_factorial(2 * j) - (2.0 * j + 1.0) * std::log(rho)) *
               incomplete_gamma_ratio(2 * j, rho);
    }
    total += (j % 2 == 0 ? 1.0 : -1.0) * std::exp(log_c) * moment;
  }
  return total;
}

double conformal_inverse_raw(double s, double rho, int n, const QuadratureSpec& q) {
  require_s(s);
  require_n(n);
  require_rho(rho);
  const double e = 0.5 * (n - s - 1.0);
  const Integrand body = [&](double a) { return std::pow(1.0 + a, e) * std::exp(-a * rho); };
  const IntegralResult r = integrate_jacobi(body, s, e + 1.0, graded_for(q, rho));
  require_converged(r, "conformal_inverse_raw");
  return r.value;
}

double conformal_constant(int n, double s, const QuadratureSpec& q) {
  require_s(s);
  require_n(n);
  static std::mutex mutex;
  static std::map<std::pair<int, double>, double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, s}); it != cache.end()) return it->second;
  }
  // Ground-state eigenvalue of the unnormalized symbol: each Gaussian
  // e^(-a rho) acts on Phi_0 by (1+a)^-n.
  const double e = 0.5 * (n - s - 1.0);
  const Integrand body = [&](double a) { return std::pow(1.0 + a, e - n); };
  const IntegralResult raw = integrate_jacobi(body, s, e + 1.0, q);
  require_converged(raw, "conformal_constant");
  const double target = gamma_ratio(0.5 * (n + 1.0 - s), 0.5 * (n + 1.0 + s));
  const double c = target / raw.value;
  std::lock_guard lock(mutex);
  return cache.try_emplace({n, s}, c).first->second;
}

double conformal_inverse_symbol(double s, double rho, int n, const QuadratureSpec& q) {
  require_rho(rho);
  const SymbolSpec spec{family::ConformalInverse{s}, n};
  const IntegralResult r =
      laplace_integral(spec, [rho](double u) { return std::exp(-u * rho); }, graded_for(q, rho));
  require_converged(r, "conformal_inverse_symbol");
  return r.value;
}

double projection_symbol(int k, double rho, int n) {
  if (k < 0) throw DomainError("projection index must be >= 0");
  require_n(n);
  require_rho(rho);
  const double sign = k % 2 == 0 ? 1.0 : -1.0;
  return sign * std::ldexp(1.0, n) * laguerre(k, n - 1.0, 2.0 * rho) * std::exp(-rho);
}

double spectral_series_symbol(const Multiplier& f, int K, double rho, int n, int averaging) {
  if (K < 0) throw DomainError("spectral series truncation must be >= 0");
  if (averaging < 0 || averaging > K) throw DomainError("averaging passes must lie in [0, K]");
  require_n(n);
  require_rho(rho);
  const std::vector<double> L = laguerre_all(K, n - 1.0, 2.0 * rho);
  const double scale = std::ldexp(1.0, n) * std::exp(-rho);
  std::vector<double> partial(K + 1);
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    sum += f(2.0 * k + n) * sign * scale * L[k];
    partial[k] = sum;
  }
  // Only the last averaging+1 partial sums feed the final value.
  std::vector<double> tail(partial.end() - (averaging + 1), partial.end());
  for (int pass = 0; pass < averaging; ++pass)
    for (std::size_t i = 0; i + 1 < tail.size() - pass; ++i) tail[i] = 0.5 * (tail[i] + tail[i + 1]);
  return tail.front();
}

double evaluate_symbol(const SymbolSpec& spec, double rho, const QuadratureSpec& q) {
  spec.validate();
  const int n = spec.n;
  return std::visit(Overloaded{
                        [&](const family::Heat& f) { return heat_symbol(f.t, rho, n); },
                        [&](const family::InversePower& f) { return inverse_power_symbol(f.s, rho, n, q); },
                        [&](const family::ConformalInverse& f) {
                          return conformal_inverse_symbol(f.s, rho, n, q);
                        },
                        [&](const family::ClosedEven& f) { return closed_even_symbol(rho, n / 2, f.coeff); },
                        [&](const family::Projection& f) { return projection_symbol(f.k, rho, n); },
                        [&](const family::SpectralSeries& f) {
                          return spectral_series_symbol(f.f, f.K, rho, n, f.averaging);
                        },
                    },
                    spec.family);
}

double symbol_derivative(const SymbolSpec& spec, const MultiIndex& alpha, const PhasePoint& p,
                         const QuadratureSpec& q) {
  if (alpha.size() != 2 * p.x.size())
    throw DomainError("derivative multi-index must have length 2n");
  if (p.dim() != spec.n) throw DomainError("phase point dimension does not match the symbol");
  const std::vector<double> coords = p.coordinates();
  const double rho = p.rho();
  const double sign = alpha.order() % 2 == 0 ? 1.0 : -1.0;
  const Integrand g = [&](double u) {
    const double root = std::sqrt(u);
    double prod = sign * std::exp(-u * rho);
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (alpha[j] == 0) continue;
      prod *= std::pow(root, alpha[j]) * hermite_poly(alpha[j], root * coords[j]);
    }
    return prod;
  };
  const IntegralResult r = laplace_integral(spec, g, graded_for(q, rho));
  require_converged(r, "symbol_derivative");
  return r.value;
}

double derivative_symbol(const MultiIndex& alpha, double s, const PhasePoint& p,
                         const QuadratureSpec& q) {
  return symbol_derivative(SymbolSpec{family::InversePower{s}, p.dim()}, alpha, p, q);
}

double quantized_eigenvalue(const SymbolSpec& spec, int k, const QuadratureSpec& q) {
  if (k < 0) throw DomainError("eigenspace index must be >= 0");
  spec.validate();
  const int n = spec.n;
  if (const auto* proj = std::get_if<family::Projection>(&spec.family)) return proj->k == k ? 1.0 : 0.0;
  if (const auto* series = std::get_if<family::SpectralSeries>(&spec.family))
    return k <= series->K ? series->f(2.0 * k + n) : 0.0;
  const IntegralResult r = laplace_integral(
      spec, [k, n](double u) { return std::pow(1.0 - u, k) * std::pow(1.0 + u, -k - n); }, q);
  require_converged(r, "quantized_eigenvalue");
  return r.value;
}

Multiplier matching_multiplier(const SymbolSpec& spec) {
  spec.validate();
  const int n = spec.n;
  return std::visit(Overloaded{
                        [](const family::Heat& f) { return multipliers::heat(f.t); },
                        [](const family::InversePower& f) { return multipliers::inverse_power(f.s); },
                        [](const family::ConformalInverse& f) { return multipliers::conformal_inverse(f.s); },
                        [](const family::ClosedEven&) { return multipliers::inverse_power(1.0); },
                        [n](const family::Projection& f) { return multipliers::projection(f.k, n); },
                        [](const family::SpectralSeries& f) {
                          const Multiplier g = f.f;
                          const double top = 2.0 * f.K;
                          return Multiplier([g, top](double lambda) { return lambda <= top + 1e-9 ? g(lambda) : 0.0; });
                        },
                    },
                    spec.family);
}

}  // namespace hw
