#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hw/errors.hpp"
#include "hw/quadrature.hpp"
#include "hw/special_fn.hpp"
#include "hw/symbols.hpp"

using namespace hw;
using doctest::Approx;

TEST_CASE("quadrature settings validation") {
  QuadratureSpec q;
  CHECK_NOTHROW(q.validate());
  q.base_nodes = 7;
  CHECK_THROWS_AS(q.validate(), DomainError);
  q = {};
  q.rel_tol = -1.0;
  CHECK_THROWS_AS(q.validate(), DomainError);
}

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  for (int n : {8, 16, 33, 64}) {
    const auto& g = gauss_legendre(n);
    double s = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], 2 * n - 2);
    CHECK(s == Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_legendre(4), DomainError);
}

TEST_CASE("finite intervals") {
  auto r = integrate_finite([](double t) { return std::exp(-t); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(integrate_finite([](double t) { return t * t; }, 0.0, 1.0).value == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(integrate_finite([](double t) { return t; }, 2.0, 2.0).value == 0.0);
  CHECK_THROWS_AS(integrate_finite([](double t) { return t; }, 1.0, 0.0), DomainError);
}

TEST_CASE("arcsine weight through the jacobi path") {
  // (1-t^2)^(-1/2) = (1-t)^(-1/2) (1+t)^(-1/2)
  auto r = integrate_jacobi([](double t) { return 1.0 / std::sqrt(1.0 + t); }, 1.0, 0.5);
  CHECK(r.value == Approx(std::numbers::pi / 2).epsilon(1e-13));
  // Beta(0.3, 0.6)
  auto b = integrate_jacobi([](double) { return 1.0; }, 0.3, 0.6);
  CHECK(b.value == Approx(std::exp(log_gamma(0.3) + log_gamma(0.6) - log_gamma(0.9))).epsilon(1e-12));
}

TEST_CASE("linearity and interval additivity") {
  auto f = [](double t) { return std::sin(3 * t) * std::exp(-t); };
  auto g = [](double t) { return 1.0 / (1.0 + t * t); };
  const double a = integrate_finite(f, 0.0, 2.0).value, b = integrate_finite(g, 0.0, 2.0).value;
  const double mix = integrate_finite([&](double t) { return 2.5 * f(t) - 0.75 * g(t); }, 0.0, 2.0).value;
  CHECK(std::abs(mix - (2.5 * a - 0.75 * b)) <= 1e-12);
  const double split = integrate_finite(f, 0.0, 0.7).value + integrate_finite(f, 0.7, 2.0).value;
  CHECK(std::abs(split - a) <= 1e-12);
}

TEST_CASE("semi-infinite and power weights") {
  CHECK(integrate_semi_infinite([](double t) { return std::exp(-t); }, 0.0).value == Approx(1.0).epsilon(1e-13));
  CHECK(integrate_semi_infinite([](double t) { return std::exp(-t * t); }, 1.0).value ==
        Approx(std::sqrt(std::numbers::pi) / 2 * std::erfc(1.0)).epsilon(1e-12));
  for (double p : {0.25, 1.0, 2.7})
    CHECK(integrate_power_weight([](double t) { return std::exp(-t); }, p).value ==
          Approx(std::exp(log_gamma(p))).epsilon(1e-12));
}

TEST_CASE("mehler integrals") {
  CHECK(integrate_mehler([](double) { return 1.0; }, 2).value == Approx(1.0).epsilon(1e-14));
  CHECK(integrate_mehler([](double) { return 1.0; }, 1).value == Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK(integrate_mehler([](double u) { return std::exp(-u); }, 2).value ==
        Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(integrate_mehler([](double) { return 1.0; }, 0), DomainError);
}

TEST_CASE("mehler path agrees with the plain finite integral for n >= 2") {
  auto F = [](double u) { return std::exp(-3.0 * u) * (1.0 + u * u); };
  for (int n : {2, 3, 4, 7}) {
    const double direct =
        integrate_finite([&](double u) { return F(u) * std::pow(1.0 - u * u, 0.5 * n - 1.0); }, 0.0, 1.0).value;
    CHECK(std::abs(integrate_mehler(F, n).value - direct) <= 1e-11);
  }
}

TEST_CASE("power endpoint") {
  auto e = [](double t) { return std::exp(-t); };
  CHECK(integrate_power_endpoint(e, 1.0).value == Approx(1.0).epsilon(1e-13));
  CHECK(integrate_power_endpoint(e, 0.5).value == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK_THROWS_AS(integrate_power_endpoint(e, 1.5), DomainError);
  CHECK_THROWS_AS(integrate_power_endpoint(e, 0.0), DomainError);
}

TEST_CASE("power endpoint matches the spectral series of H^-1/2") {
  auto g = [](double t) { return std::exp(-std::tanh(t)) / std::cosh(t); };
  const double b = integrate_power_endpoint(g, 0.5).value / std::sqrt(std::numbers::pi);
  const double series = spectral_series_symbol(multipliers::inverse_power(0.5), 400, 1.0, 1, 16);
  CHECK(std::abs(b - series) <= 1e-8 * std::abs(b));
}

TEST_CASE("gamma-function integral of sinh powers") {
  auto c = gr_identity_check(3.0, 1.0, 1.0);
  CHECK(c.lhs == Approx(0.125).epsilon(1e-13));
  CHECK(c.rhs == Approx(0.125).epsilon(1e-13));
  CHECK(gr_identity_check(5.0, 1.0, 2.0).abs_diff <= 1e-10);
  const auto d = gr_identity_check(2.5, 0.5, 1.2);
  CHECK(d.abs_diff <= 1e-10);
  // the 1/beta factor matters once beta != 1
  CHECK(std::abs(d.rhs_without_beta - d.rhs) > 0.1 * d.rhs);
  CHECK_THROWS_AS(gr_identity_check(1.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(gr_identity_check(3.0, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(gr_identity_check(3.0, 1.0, -1.0), DomainError);
}

TEST_CASE("graded start finds mass hidden near the left end") {
  auto spike = [](double u) { return std::exp(-1e5 * u); };
  QuadratureSpec q;
  q.grading = 20;
  CHECK(integrate_finite(spike, 0.0, 1.0, q).value == Approx(1e-5).epsilon(1e-10));
  q.grading = 61;
  CHECK_THROWS_AS(q.validate(), DomainError);
}

TEST_CASE("non-convergence is reported") {
  QuadratureSpec q;
  q.max_depth = 2;
  q.rel_tol = 1e-15;
  q.abs_tol = 1e-300;
  auto r = integrate_finite([](double t) { return std::sin(200.0 * t); }, 0.0, 3.0, q);
  CHECK_FALSE(r.acceptable());
  CHECK_THROWS_AS(require_converged(r, "probe"), AccuracyError);
}
