#include "hw/quantize.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hw/errors.hpp"
#include "hw/parallel.hpp"

namespace hw {

void GridSpec::validate() const {
  if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("grid extent L must be positive");
  if (N < 4 || N % 2 != 0) throw DomainError("grid size N must be even and >= 4");
}

GridFunction::GridFunction(GridSpec g, std::vector<double> values) : grid(g), samples(std::move(values)) {
  grid.validate();
  if (samples.size() != static_cast<std::size_t>(grid.N))
    throw DomainError("grid function length does not match N");
}

GridFunction GridFunction::zeros(const GridSpec& g) {
  return GridFunction(g, std::vector<double>(g.N, 0.0));
}

GridFunction GridFunction::sample(const GridSpec& g, const std::function<double(double)>& f) {
  std::vector<double> v(g.N);
  for (int i = 0; i < g.N; ++i) v[i] = f(g.point(i));
  return GridFunction(g, std::move(v));
}

namespace {

void require_same_grid(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw DomainError("grid mismatch");
}

}  // namespace

double GridFunction::norm() const { return std::sqrt(inner(*this)); }

double GridFunction::inner(const GridFunction& other) const {
  require_same_grid(grid, other.grid);
  double s = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) s += samples[i] * other.samples[i];
  return grid.spacing() * s;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  require_same_grid(grid, other.grid);
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] += other.samples[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  require_same_grid(grid, other.grid);
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] -= other.samples[i];
  return *this;
}

GridFunction& GridFunction::operator*=(double c) {
  for (double& v : samples) v *= c;
  return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator*(double c, GridFunction a) { return a *= c; }

double OperatorKernel::max_asymmetry() const {
  double m = 0.0;
  for (int i = 0; i < grid.N; ++i)
    for (int j = i + 1; j < grid.N; ++j) m = std::max(m, std::abs(at(i, j) - at(j, i)));
  return m;
}

OperatorKernel build_kernel(const RadialSymbol& b, const GridSpec& g, const std::string& id) {
  g.validate();
  const int N = g.N;
  const int half = N / 2;
  const double h = g.spacing();
  const double dy = std::numbers::pi / g.L;

  // table[t][k] = w_k b(m_t^2 + y_k^2), midpoint m_t = (t - N) h / 2, t = i + j
  // runs over 0..2N-2 but |m| only depends on |t - N|.
  std::vector<double> table(static_cast<std::size_t>(N + 1) * (half + 1));
  parallel_for(N + 1, [&](std::size_t t) {
    const double m = 0.5 * h * static_cast<double>(t);
    for (int k = 0; k <= half; ++k) {
      const double y = k * dy;
      const double w = (k == 0 || k == half) ? 1.0 : 2.0;
      double v;
      try {
        v = b(m * m + y * y);
      } catch (const AccuracyError& e) {
        std::ostringstream os;
        os << "kernel assembly failed at midpoint " << m << ", y = " << y << ": " << e.what();
        throw AccuracyError(os.str(), e.residual());
      }
      table[t * (half + 1) + k] = w * v;
    }
  });

  std::vector<double> cosines(N);
  for (int r = 0; r < N; ++r) cosines[r] = std::cos(2.0 * std::numbers::pi * r / N);

  OperatorKernel K{g, std::vector<double>(static_cast<std::size_t>(N) * N), id};
  const double scale = 1.0 / (2.0 * g.L);
  parallel_for(N, [&](std::size_t ii) {
    const int i = static_cast<int>(ii);
    for (int j = 0; j < N; ++j) {
      const double* row = &table[static_cast<std::size_t>(std::abs(i + j - N)) * (half + 1)];
      const int d = std::abs(i - j);
      double s = 0.0;
      int phase = 0;
      for (int k = 0; k <= half; ++k) {
        s += row[k] * cosines[phase];
        phase += d;
        if (phase >= N) phase -= N;
      }
      K.matrix[ii * N + j] = scale * s;
    }
  });
  return K;
}

OperatorKernel build_kernel(const SymbolSpec& spec, const GridSpec& g, const QuadratureSpec& q) {
  spec.validate();
  q.validate();
  if (spec.n != 1) throw DomainError("kernel assembly is implemented for n = 1 only");
  return build_kernel([&](double rho) { return evaluate_symbol(spec, rho, q); }, g, spec.id());
}

GridFunction apply_operator(const OperatorKernel& k, const GridFunction& phi) {
  require_same_grid(k.grid, phi.grid);
  const int N = k.grid.N;
  const double h = k.grid.spacing();
  std::vector<double> out(N);
  for (int i = 0; i < N; ++i) {
    const double* row = &k.matrix[static_cast<std::size_t>(i) * N];
    double s = 0.0;
    for (int j = 0; j < N; ++j) s += row[j] * phi.samples[j];
    out[i] = h * s;
  }
  return GridFunction(k.grid, std::move(out));
}

GridFunction hermite_on_grid(int k, const GridSpec& g) {
  if (k < 0) throw DomainError("Hermite index must be >= 0");
  return GridFunction::sample(g, [k](double t) { return hermite_h(k, t); });
}

namespace {

constexpr int kMaxCoefficients = 60;

// rows[i] = h_0..h_K at xi_i
std::vector<std::vector<double>> hermite_rows(const GridSpec& g, int K) {
  std::vector<std::vector<double>> rows(g.N);
  for (int i = 0; i < g.N; ++i) rows[i] = hermite_h_all(K, g.point(i));
  return rows;
}

}  // namespace

std::vector<double> hermite_coefficients(const GridFunction& phi, int K) {
  if (K < 0 || K > kMaxCoefficients) throw DomainError("hermite_coefficients needs 0 <= K <= 60");
  const auto rows = hermite_rows(phi.grid, K);
  const double h = phi.grid.spacing();
  std::vector<double> c(K + 1, 0.0);
  for (int i = 0; i < phi.grid.N; ++i)
    for (int k = 0; k <= K; ++k) c[k] += phi.samples[i] * rows[i][k];
  for (double& v : c) v *= h;
  return c;
}

GridFunction spectral_apply(const Multiplier& f, const GridFunction& phi, int K) {
  std::vector<double> c = hermite_coefficients(phi, K);
  for (int k = 0; k <= K; ++k) c[k] *= f(2.0 * k + 1.0);
  const auto rows = hermite_rows(phi.grid, K);
  std::vector<double> out(phi.grid.N, 0.0);
  for (int i = 0; i < phi.grid.N; ++i)
    for (int k = 0; k <= K; ++k) out[i] += c[k] * rows[i][k];
  return GridFunction(phi.grid, std::move(out));
}

EigenResidual eigen_residual(const OperatorKernel& kernel, int k) {
  if (k < 0 || k > 12) throw DomainError("eigen_residual needs 0 <= k <= 12");
  const GridFunction phi = hermite_on_grid(k, kernel.grid);
  const GridFunction image = apply_operator(kernel, phi);
  EigenResidual r;
  r.eigenvalue = image.inner(phi);
  r.residual = (image - r.eigenvalue * phi).norm();
  return r;
}

EigenResidual eigen_residual(const SymbolSpec& spec, int k, const GridSpec& g, const QuadratureSpec& q) {
  if (k < 0 || k > 12) throw DomainError("eigen_residual needs 0 <= k <= 12");
  return eigen_residual(build_kernel(spec, g, q), k);
}

}  // namespace hw
