#pragma once

#include <stdexcept>
#include <string>

namespace realpart {

/// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A (derivative order, exponent) pair or parameter regime that the
/// requested operation does not cover.
class AdmissibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature ran out of panels before meeting its tolerance.
/// Carries the best value and error estimate reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_value, double best_error, int panels)
      : std::runtime_error(what), best_value_(best_value), best_error_(best_error), panels_(panels) {}

  double best_value() const noexcept { return best_value_; }
  double best_error() const noexcept { return best_error_; }
  int panels() const noexcept { return panels_; }

 private:
  double best_value_;
  double best_error_;
  int panels_;
};

}  // namespace realpart
