#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace memlab {

/// Precondition or parameter-domain violation (bad shapes, non-Hurwitz input, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidGrid : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical routine could not produce a trustworthy result.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// State or gradient became non-finite. `index` is the first offending
/// time sample (trajectories) or batch sample (gradients).
class DivergenceError : public NumericFailure {
 public:
  DivergenceError(const std::string& what, std::size_t index)
      : NumericFailure(what + " (index " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace memlab
