#pragma once

#include <stdexcept>
#include <string>

namespace lacdhva {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller violated a documented precondition (grid resolution, ordering, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed: non-finite samples, eigensolver stall.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Not enough data points to form an estimate.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A system configuration violates its basic invariants.
class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace lacdhva
