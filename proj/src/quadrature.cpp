#include "hw/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hw/errors.hpp"
#include "hw/special_fn.hpp"

namespace hw {

namespace {

constexpr int kMinNodes = 8;
constexpr int kMaxNodes = 64;
constexpr std::size_t kMaxPanels = 1u << 14;

GaussRule build_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

struct Panel {
  double a;
  double b;
  int depth;
  double left;   // rule on [a, mid]
  double right;  // rule on [mid, b]
  double err;
  double magnitude;  // rule applied to |f|
};

struct PanelOrder {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.a > y.a;
  }
};

class Engine {
 public:
  Engine(const Integrand& f, const GaussRule& rule) : f_(f), rule_(rule) {}

  // Rule on [a, b]; accumulates the |f| rule into magnitude.
  double apply(double a, double b, double& magnitude) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    double mag = 0.0;
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      const double v = f_(c + h * rule_.nodes[i]);
      sum += rule_.weights[i] * v;
      mag += rule_.weights[i] * std::abs(v);
    }
    evaluations_ += static_cast<long>(rule_.nodes.size());
    magnitude += h * mag;
    return h * sum;
  }

  Panel make_panel(double a, double b, int depth, double whole) {
    const double mid = 0.5 * (a + b);
    double mag = 0.0;
    const double l = apply(a, mid, mag);
    const double r = apply(mid, b, mag);
    return Panel{a, b, depth, l, r, std::abs(whole - (l + r)), mag};
  }

  long evaluations() const { return evaluations_; }

 private:
  const Integrand& f_;
  const GaussRule& rule_;
  long evaluations_ = 0;
};

// Neumaier-compensated sum in a fixed order.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

QuadratureSpec halved(const QuadratureSpec& q) {
  QuadratureSpec h = q;
  h.rel_tol *= 0.5;
  h.abs_tol *= 0.5;
  return h;
}

// Integral over [0, upper] of t^(f-1) h(t), 0 < f <= 1, via t = v^(1/f).
IntegralResult power_substituted(const Integrand& h, double f, double upper,
                                 const QuadratureSpec& q) {
  if (f == 1.0) return integrate_finite(h, 0.0, upper, q);
  const double inv = 1.0 / f;
  const Integrand mapped = [&](double v) { return inv * h(std::pow(v, inv)); };
  return integrate_finite(mapped, 0.0, std::pow(upper, f), q);
}

// Splits an exponent p > 0 into integer m >= 0 and fraction f in (0, 1]
// with p - 1 = m + (f - 1).
void split_exponent(double p, int& m, double& f) {
  m = static_cast<int>(std::ceil(p)) - 1;
  f = p - m;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw DomainError("quadrature tolerances must be positive");
  if (max_depth < 1) throw DomainError("quadrature max_depth must be >= 1");
  if (base_nodes < kMinNodes || base_nodes > kMaxNodes)
    throw DomainError("quadrature base_nodes must lie in [8, 64]");
  if (grading < 0 || grading > 60) throw DomainError("quadrature grading must lie in [0, 60]");
}

IntegralResult& IntegralResult::operator+=(const IntegralResult& other) {
  value += other.value;
  err_estimate += other.err_estimate;
  evaluations += other.evaluations;
  const bool both_converged = converged && other.converged;
  roundoff_limited = (converged || roundoff_limited) &&
                     (other.converged || other.roundoff_limited) && !both_converged;
  converged = both_converged;
  return *this;
}

void require_converged(const IntegralResult& result, const std::string& context) {
  if (!result.acceptable())
    throw AccuracyError(context + ": quadrature did not converge (error estimate " +
                            std::to_string(result.err_estimate) + ")",
                        result.err_estimate);
}

const GaussRule& gauss_legendre(int n) {
  static const std::array<GaussRule, kMaxNodes - kMinNodes + 1> rules = [] {
    std::array<GaussRule, kMaxNodes - kMinNodes + 1> all;
    for (int k = kMinNodes; k <= kMaxNodes; ++k) all[k - kMinNodes] = build_gauss_legendre(k);
    return all;
  }();
  if (n < kMinNodes || n > kMaxNodes)
    throw DomainError("Gauss-Legendre order must lie in [8, 64]");
  return rules[n - kMinNodes];
}

IntegralResult integrate_finite(const Integrand& f, double a, double b,
                                const QuadratureSpec& q) {
  q.validate();
  if (!(a < b)) {
    if (a == b) return {};
    throw DomainError("integrate_finite requires a < b");
  }

  Engine engine(f, gauss_legendre(q.base_nodes));
  std::vector<Panel> heap;
  std::vector<Panel> frozen;
  // Geometric start toward a: cuts at a + (b-a) 2^-j.
  {
    std::vector<double> cuts{b};
    for (int j = 1; j <= q.grading; ++j) cuts.push_back(a + (b - a) * std::ldexp(1.0, -j));
    cuts.push_back(a);
    for (std::size_t j = 0; j + 1 < cuts.size(); ++j) {
      double mag = 0.0;
      const double whole = engine.apply(cuts[j + 1], cuts[j], mag);
      heap.push_back(engine.make_panel(cuts[j + 1], cuts[j], 0, whole));
    }
    std::make_heap(heap.begin(), heap.end(), PanelOrder{});
  }

  double total = 0.0, total_err = 0.0, total_mag = 0.0;
  for (const Panel& p : heap) {
    total += p.left + p.right;
    total_err += p.err;
    total_mag += p.magnitude;
  }
  const double eps = std::numeric_limits<double>::epsilon();

  IntegralResult out;
  while (true) {
    const double tol = std::max(q.abs_tol, q.rel_tol * std::abs(total));
    if (total_err <= tol) break;
    if (total_err <= 100.0 * eps * total_mag) break;
    if (heap.empty() || heap.size() + frozen.size() >= kMaxPanels) break;

    std::pop_heap(heap.begin(), heap.end(), PanelOrder{});
    const Panel worst = heap.back();
    heap.pop_back();
    if (worst.depth >= q.max_depth) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel lo = engine.make_panel(worst.a, mid, worst.depth + 1, worst.left);
    const Panel hi = engine.make_panel(mid, worst.b, worst.depth + 1, worst.right);
    total += (lo.left + lo.right + hi.left + hi.right) - (worst.left + worst.right);
    total_err += (lo.err + hi.err) - worst.err;
    total_mag += (lo.magnitude + hi.magnitude) - worst.magnitude;
    heap.push_back(lo);
    std::push_heap(heap.begin(), heap.end(), PanelOrder{});
    heap.push_back(hi);
    std::push_heap(heap.begin(), heap.end(), PanelOrder{});
  }

  heap.insert(heap.end(), frozen.begin(), frozen.end());
  std::sort(heap.begin(), heap.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  CompensatedSum value, err, mag;
  for (const Panel& p : heap) {
    value.add(p.left);
    value.add(p.right);
    err.add(p.err);
    mag.add(p.magnitude);
  }
  out.value = value.value();
  out.err_estimate = err.value();
  out.evaluations = engine.evaluations();
  out.converged = out.err_estimate <= std::max(q.abs_tol, q.rel_tol * std::abs(out.value));
  out.roundoff_limited = !out.converged && out.err_estimate <= 100.0 * eps * mag.value();
  return out;
}

IntegralResult integrate_jacobi(const Integrand& f, double p, double q_exp,
                                const QuadratureSpec& q) {
  if (!(p > 0.0) || !(q_exp > 0.0))
    throw DomainError("integrate_jacobi requires positive exponents");
  const QuadratureSpec half = halved(q);

  int m_left = 0, m_right = 0;
  double f_left = 1.0, f_right = 1.0;
  split_exponent(p, m_left, f_left);
  split_exponent(q_exp, m_right, f_right);

  const Integrand left = [&](double u) {
    return std::pow(u, m_left) * std::pow(1.0 - u, q_exp - 1.0) * f(u);
  };
  const Integrand right = [&](double w) {
    const double u = 1.0 - w;
    return std::pow(w, m_right) * std::pow(u, p - 1.0) * f(u);
  };
  IntegralResult out = power_substituted(left, f_left, 0.5, half);
  out += power_substituted(right, f_right, 0.5, half);
  return out;
}

IntegralResult integrate_semi_infinite(const Integrand& f, double a,
                                       const QuadratureSpec& q) {
  const Integrand mapped = [&](double v) {
    const double one_minus = 1.0 - v;
    const double t = a + v / one_minus;
    if (!std::isfinite(t)) return 0.0;
    const double value = f(t);
    return value == 0.0 ? 0.0 : value / (one_minus * one_minus);
  };
  return integrate_finite(mapped, 0.0, 1.0, q);
}

IntegralResult integrate_power_weight(const Integrand& g, double p,
                                      const QuadratureSpec& q) {
  if (!(p > 0.0)) throw DomainError("integrate_power_weight requires p > 0");
  const QuadratureSpec half = halved(q);
  int m = 0;
  double frac = 1.0;
  split_exponent(p, m, frac);
  const Integrand head = [&](double t) { return std::pow(t, m) * g(t); };
  IntegralResult out = power_substituted(head, frac, 1.0, half);
  const Integrand tail = [&](double t) {
    const double v = g(t);
    return v == 0.0 ? 0.0 : std::pow(t, p - 1.0) * v;
  };
  out += integrate_semi_infinite(tail, 1.0, half);
  return out;
}

IntegralResult integrate_mehler(const Integrand& F, int n, const QuadratureSpec& q) {
  if (n < 1) throw DomainError("integrate_mehler requires n >= 1");
  if (n % 2 == 0) {
    const int power = n / 2 - 1;
    const Integrand weighted = [&](double u) {
      return power == 0 ? F(u) : std::pow(1.0 - u * u, power) * F(u);
    };
    return integrate_finite(weighted, 0.0, 1.0, q);
  }
  const Integrand angular = [&](double theta) {
    const double c = std::cos(theta);
    return (n == 1 ? 1.0 : std::pow(c, n - 1)) * F(std::sin(theta));
  };
  return integrate_finite(angular, 0.0, 0.5 * std::numbers::pi, q);
}

IntegralResult integrate_power_endpoint(const Integrand& g, double s,
                                        const QuadratureSpec& q) {
  if (!(s > 0.0 && s <= 1.0))
    throw DomainError("integrate_power_endpoint requires 0 < s <= 1");
  return integrate_power_weight(g, s, q);
}

namespace {

// log(sinh(x) / x) for x >= 0.
double log_sinhc(double x) {
  if (x < 1e-4) return x * x / 6.0;
  if (x < 20.0) return std::log(std::sinh(x) / x);
  return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x)) - std::log(x);
}

}  // namespace

GrIdentityCheck gr_identity_check(double mu, double beta, double nu,
                                  const QuadratureSpec& q) {
  if (!(beta > 0.0)) throw DomainError("gr_identity_check requires beta > 0");
  if (!(nu > -1.0)) throw DomainError("gr_identity_check requires nu > -1");
  if (!(mu > beta * nu)) throw DomainError("gr_identity_check requires mu > beta * nu");

  // e^(-mu t) sinh^nu(beta t) = t^nu * [e^(-mu t) (sinh(beta t)/t)^nu]
  const double log_beta = std::log(beta);
  const Integrand g = [&](double t) {
    return std::exp(-mu * t + nu * (log_beta + log_sinhc(beta * t)));
  };
  const IntegralResult lhs = integrate_power_weight(g, nu + 1.0, q);
  require_converged(lhs, "gr_identity_check");

  const double a = mu / (2.0 * beta);
  const double log_core = -(nu + 1.0) * std::numbers::ln2 + log_gamma(a - 0.5 * nu) +
                          log_gamma(nu + 1.0) - log_gamma(a + 0.5 * nu + 1.0);
  GrIdentityCheck out;
  out.lhs = lhs.value;
  out.rhs_without_beta = std::exp(log_core);
  out.rhs = out.rhs_without_beta / beta;
  out.abs_diff = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace hw
