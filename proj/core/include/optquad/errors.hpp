#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace optquad {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the documented domain (order, node count, index).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation exists, but not for this order.
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A closed-form or operator construction broke down numerically.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Dense solve failed: singular, too ill-conditioned, or residual too large.
class SolveError : public Error {
 public:
  SolveError(const std::string& what, double condition_estimate)
      : Error(what), condition_estimate_(condition_estimate) {}

  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

/// A truncated sum cannot meet the requested tolerance.
class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, double achievable_bound)
      : Error(what), achievable_bound_(achievable_bound) {}

  /// Best bound the given window achieves; +inf when the tail diverges.
  double achievable_bound() const noexcept { return achievable_bound_; }

 private:
  double achievable_bound_;
};

}  // namespace optquad
