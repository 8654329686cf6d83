#pragma once

#include <stdexcept>
#include <string>

namespace divsum {

/// Argument outside the mathematical domain of an operation (poles, branch cut).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative procedure (quadrature, continued fraction) ran out of budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved_log10_error)
      : std::runtime_error(what), achieved_log10_error_(achieved_log10_error) {}

  /// log10 of the best error estimate reached before giving up.
  double achieved_log10_error() const noexcept { return achieved_log10_error_; }

 private:
  double achieved_log10_error_;
};

/// Denominator of a sequence transformation cancelled to zero.
class VanishingDenominator : public std::runtime_error {
 public:
  enum class Cause { precision_exhausted, pole };

  VanishingDenominator(const std::string& what, Cause cause)
      : std::runtime_error(what), cause_(cause) {}

  Cause cause() const noexcept { return cause_; }

 private:
  Cause cause_;
};

/// Linear system without a unique solution.
class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace divsum
