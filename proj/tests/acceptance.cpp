// Acceptance criteria 1-10: `acceptance N` runs one, `acceptance` runs all.
// One line per criterion; exit status 0 only if every requested one passes.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hw/config.hpp"
#include "hw/quantize.hpp"
#include "hw/report.hpp"
#include "hw/suites.hpp"
#include "hw/symbols.hpp"
#include "hw/verify.hpp"

using namespace hw;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

Outcome spectral_ground_truth() {
  const GridSpec g{12.0, 512};
  const std::vector<SymbolSpec> specs{{family::Heat{0.25}, 1},        {family::Heat{1.0}, 1},
                                      {family::InversePower{0.5}, 1}, {family::InversePower{1.0}, 1},
                                      {family::ConformalInverse{0.5}, 1}, {family::ConformalInverse{1.0}, 1}};
  double worst_rel = 0.0, worst_res = 0.0;
  for (const auto& spec : specs) {
    const OperatorKernel K = build_kernel(spec, g);
    const Multiplier f = matching_multiplier(spec);
    for (int k = 0; k <= 8; ++k) {
      const EigenResidual r = eigen_residual(K, k);
      worst_rel = std::max(worst_rel, rel(r.eigenvalue, f(2.0 * k + 1.0)));
      worst_res = std::max(worst_res, r.residual);
    }
  }
  return {worst_rel <= 1e-5 && worst_res <= 1e-5,
          "max rel eigenvalue error " + fmt("%.3g", worst_rel) + ", max residual " + fmt("%.3g", worst_res)};
}

Outcome arbitration() {
  const auto rep = closed_form_arbitration({1, 2, 3}, {0.5, 1.0, 5.0, 20.0}, 1e-10);
  double binom = 0.0, printed_min = INFINITY;
  for (const auto& r : rep.records) {
    if (r.family == CoeffFamily::BinomialFromProof) binom = std::max(binom, r.rel_diff);
    if (r.family == CoeffFamily::PaperPrinted && r.m >= 2) printed_min = std::min(printed_min, r.rel_diff);
  }
  const bool ok = binom <= 1e-10 && printed_min > 1e-10 && rep.matching.size() == 1 &&
                  rep.matching[0] == CoeffFamily::BinomialFromProof;
  return {ok, "BinomialFromProof max rel " + fmt("%.3g", binom) + ", PaperPrinted (m>=2) min rel " +
                  fmt("%.3g", printed_min) + ", " + std::to_string(rep.records.size()) + " records"};
}

Outcome taylor_identity() {
  double worst = 0.0;
  for (int j = 0; j <= 12; ++j)
    for (double a : {0.5, 1.0, 5.0, 20.0}) {
      const double lj = log_factorial(j);
      const IntegralResult r =
          integrate_finite([&](double t) { return t <= 0.0 ? (j == 0 ? 1.0 : 0.0) : std::exp(j * std::log(t) - t - lj); },
                           0.0, a);
      worst = std::max(worst, std::abs(incomplete_gamma_ratio(j, a) - r.value));
    }
  return {worst <= 1e-10, "max abs diff " + fmt("%.3g", worst)};
}

// d^alpha b against a Richardson-extrapolated central difference of the
// order |alpha|-1 derivative, at a point off both axes.
Outcome derivative_representation() {
  QuadratureSpec tight;
  tight.rel_tol = 1e-14;
  tight.abs_tol = 1e-300;
  const double h = 1e-4, theta = 0.6;
  double worst = 0.0;
  std::string where;
  for (double s : {0.5, 1.0})
    for (double rho : {1.0, 4.0}) {
      const double x = std::sqrt(rho) * std::cos(theta), xi = std::sqrt(rho) * std::sin(theta);
      for (const MultiIndex& alpha : two_slot_ladder(3, 1)) {
        const double exact = derivative_symbol(alpha, s, PhasePoint({x}, {xi}), tight);
        double approx;
        if (alpha.order() == 0) {
          approx = inverse_power_symbol(s, rho, 1, tight);
        } else {
          const std::size_t j = alpha[0] > 0 ? 0 : 1;
          const MultiIndex lower = alpha.shifted(j, -1);
          auto lower_at = [&](double shift) {
            double c[2] = {x, xi};
            c[j] += shift;
            return derivative_symbol(lower, s, PhasePoint({c[0]}, {c[1]}), tight);
          };
          const double d1 = (lower_at(h) - lower_at(-h)) / (2 * h);
          const double d2 = (lower_at(h / 2) - lower_at(-h / 2)) / h;
          approx = (4 * d2 - d1) / 3;
        }
        const double e = rel(approx, exact);
        if (e > worst) {
          worst = e;
          where = "alpha=" + alpha.to_string() + " s=" + fmt("%g", s) + " rho=" + fmt("%g", rho);
        }
      }
    }
  return {worst <= 1e-6, "max rel diff " + fmt("%.3g", worst) + " at " + where};
}

Outcome gevrey() {
  const std::vector<double> rho{1, 4, 16, 64, 100};
  double worst = 0.0;
  bool ok = true;
  std::ostringstream per_r;
  for (double r : {0.0, 0.5, 1.0}) {
    double max_r = 0.0;
    for (double s : {0.5, 1.0})
      for (const SymbolSpec& spec : {SymbolSpec{family::InversePower{s}, 1}, SymbolSpec{family::ConformalInverse{s}, 1}}) {
        const EstimateReport rep = gevrey_scan(spec, r, 10, rho);
        ok = ok && rep.all_finite && rep.bounded_increments && rep.max_c_emp <= 8.0;
        max_r = std::max(max_r, rep.max_c_emp);
      }
    worst = std::max(worst, max_r);
    per_r << " r=" << r << ":" << fmt("%.4f", max_r);
  }
  return {ok && worst <= 8.0, "max C_emp " + fmt("%.4f", worst) + " (cap 8);" + per_r.str()};
}

Outcome fourier() {
  double worst = 0.0, rt = 0.0;
  std::string constants;
  for (double s : {0.5, 1.0}) {
    const auto rep = fourier_macdonald_check(s, {0.5, 1.0, 2.0, 4.0});
    worst = std::max(worst, rep.max_deviation);
    rt = std::max(rt, rep.round_trip_error);
    constants += " C(s=" + fmt("%g", s) + ")=" + fmt("%.10g", rep.fitted_constant);
  }
  return {worst <= 1e-3, "max shape deviation " + fmt("%.3g", worst) + ", round trip " + fmt("%.3g", rt) + ";" +
                             constants};
}

Outcome laguerre_expansion() {
  double printed = 0.0, derived = 0.0, coeff = 0.0;
  for (auto [a, sg] : {std::pair{1.0, 0.5}, std::pair{2.0, 1.0}}) {
    printed = std::max(printed, laguerre_expansion_check(a, sg, {0.5, 1.0, 2.0}, 300, LaguerreConstant::Printed).max_deviation);
    derived = std::max(derived, laguerre_expansion_check(a, sg, {0.5, 1.0, 2.0}, 300, LaguerreConstant::Derived).max_deviation);
    coeff = std::max(coeff, laguerre_coefficient_check(a, sg, 40, LaguerreConstant::Derived).max_deviation);
  }
  return {printed <= 1e-6, "K=300 max deviation " + fmt("%.3g", printed) + " (printed constant), " +
                               fmt("%.3g", derived) + " (derived constant); coefficient projection k<=40 " +
                               fmt("%.3g", coeff)};
}

Outcome gr_identity() {
  double worst = 0.0;
  for (const auto& [mu, beta, nu] : gr_identity_samples(20)) {
    const GrIdentityCheck c = gr_identity_check(mu, beta, nu);
    worst = std::max(worst, c.abs_diff / std::max(1.0, std::abs(c.rhs)));
  }
  return {worst <= 1e-9, "20 samples, max diff " + fmt("%.3g", worst)};
}

Outcome generating_function() {
  double worst = 0.0;
  for (double t : {0.25, 0.7})
    for (double rho : {0.0, 2.0, 10.0})
      worst = std::max(worst, rel(spectral_series_symbol(multipliers::heat(t), 200, rho, 1), heat_symbol(t, rho, 1)));
  return {worst <= 1e-10, "max rel diff " + fmt("%.3g", worst)};
}

std::string suite_body(const std::string& suite, const char* threads) {
  setenv("HW_THREADS", threads, 1);
  const Report r = run_suite(suite, RunConfig{});
  std::ostringstream os;
  os << (r.passed ? "pass" : "fail") << '\n';
  for (const auto& [k, v] : r.summary) os << k << '=' << format_cell(v) << '\n';
  write_csv(os, r.table);
  return os.str();
}

Outcome determinism() {
  std::string diffs;
  for (const auto& suite : suite_names())
    if (suite_body(suite, "1") != suite_body(suite, "4")) diffs += " " + suite;
  unsetenv("HW_THREADS");
  return {diffs.empty(), diffs.empty() ? "all 6 suites identical for HW_THREADS=1 and 4" : "differs:" + diffs};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{{"spectral ground truth", spectral_ground_truth},
                                   {"closed-form arbitration", arbitration},
                                   {"Taylor identity", taylor_identity},
                                   {"derivative representation", derivative_representation},
                                   {"Gevrey scan", gevrey},
                                   {"Fourier/Macdonald pair", fourier},
                                   {"Laguerre expansion", laguerre_expansion},
                                   {"GR 3.541.1", gr_identity},
                                   {"generating function", generating_function},
                                   {"determinism", determinism}};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= 10; ++i) which.push_back(i);

  bool ok = true;
  for (int id : which) {
    if (id < 1 || id > 10) {
      std::fprintf(stderr, "no criterion %d\n", id);
      return 2;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[id - 1].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %-26s %s  %s  [%.1fs]\n", id, all[id - 1].name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), sec);
    std::fflush(stdout);
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
