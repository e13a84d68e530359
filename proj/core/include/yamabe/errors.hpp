#pragma once

#include <stdexcept>
#include <string>

namespace yamabe {

/// A precondition on an argument was violated (dimension too small, c outside
/// [0,1], gamma outside (0,1], ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested formula is valid only on part of the parameter space, and
/// this point is outside it (e.g. the curvature comparison where s_c <= 0).
class NotApplicableError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A constant needed for the computation is neither in the registry nor
/// derivable by a built-in formula.
class MissingConstantError : public std::runtime_error {
 public:
  explicit MissingConstantError(std::string key)
      : std::runtime_error("no constant available for " + key), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Quadrature, root finding or minimization failed to produce a finite,
/// converged result.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace yamabe
