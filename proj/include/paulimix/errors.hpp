#pragma once

#include <stdexcept>
#include <string>

namespace paulimix {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A formula hit a vanishing denominator.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the three-way ancilla unitary when a weight makes its
/// parametrization singular.
class DegenerateParametrizationError : public DomainError {
 public:
  using DomainError::DomainError;
};

class MissingObservableError : public std::invalid_argument {
 public:
  explicit MissingObservableError(const std::string& label)
      : std::invalid_argument("measurement record is missing observable '" + label + "'"),
        label_(label) {}

  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// The per-point estimator cannot see the parameter (x1 + x2 == 0).
class NonIdentifiableError : public DomainError {
 public:
  using DomainError::DomainError;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid experiment configuration; `field()` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace paulimix
