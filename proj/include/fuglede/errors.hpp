#pragma once

#include <stdexcept>
#include <string>

namespace fuglede {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or configuration (dimension mismatch, bad norm spec, ...).
class ConfigError : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public ConfigError {
public:
  using ConfigError::ConfigError;
};

class InvalidSpec : public ConfigError {
public:
  using ConfigError::ConfigError;
};

class DimensionTooLarge : public ConfigError {
public:
  using ConfigError::ConfigError;
};

/// Failures that come from the numerics rather than from the caller.
class NumericalError : public Error {
public:
  using Error::Error;
};

class NotNormal : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NonConvergence : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class ClusterAmbiguity : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class ZeroCommutator : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// Raised when a counterexample scale would leave double range. Carries the
/// best scale reached and its residual when a convergence search gave up.
class OverflowGuard : public NumericalError {
public:
  OverflowGuard(const std::string& what, double best_m = 0.0, double best_residual = 0.0)
      : NumericalError(what), best_m_(best_m), best_residual_(best_residual) {}

  double best_m() const noexcept { return best_m_; }
  double best_residual() const noexcept { return best_residual_; }

private:
  double best_m_;
  double best_residual_;
};

} // namespace fuglede
