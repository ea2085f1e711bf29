#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kflow {

/// Broad failure classes. The CLI maps each to a distinct exit code.
enum class ErrorCategory {
  kInput = 2,
  kConfig = 3,
  kNumeric = 4,
  kIo = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

/// Malformed arguments: dimension mismatches, series too short, bad indices.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorCategory::kInput, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCategory::kConfig, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCategory::kIo, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(ErrorCategory::kNumeric, what) {}
};

/// Factorization of K(X,X)+lambda*I failed. `pivot` is the zero-based row at
/// which the Cholesky pivot became non-positive (or the LU pivot vanished).
class FitError : public NumericError {
 public:
  FitError(const std::string& what, std::ptrdiff_t pivot)
      : NumericError(what + " (pivot " + std::to_string(pivot) + ")"), pivot_(pivot) {}

  std::ptrdiff_t pivot() const noexcept { return pivot_; }

 private:
  std::ptrdiff_t pivot_;
};

/// A trajectory left the finite/bounded region.
class DivergenceError : public NumericError {
 public:
  DivergenceError(const std::string& what, std::size_t step)
      : NumericError(what + " at step " + std::to_string(step)), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class TrainingError : public NumericError {
 public:
  explicit TrainingError(const std::string& what) : NumericError(what) {}
};

class MetricError : public NumericError {
 public:
  explicit MetricError(const std::string& what) : NumericError(what) {}
};

}  // namespace kflow
