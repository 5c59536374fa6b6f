#pragma once

#include <stdexcept>
#include <string>

namespace husimi {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or quadrature failed to reach its requested accuracy.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace husimi
