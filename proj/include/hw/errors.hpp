#pragma once

#include <stdexcept>
#include <string>

namespace hw {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadrature did not reach its requested tolerance.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  /// Error estimate of the integral that failed.
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Invalid run configuration (bad key, bad value, bad flag).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hw
