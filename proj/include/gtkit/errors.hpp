#pragma once

#include <stdexcept>
#include <string>

namespace gtkit {

/// Shape mismatch (non-square determinant, length mismatch, ...).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Evaluation at a pole of a rational function.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// An argument violates the documented precondition of an identity.
struct ContractViolation : std::domain_error {
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration would exceed the configured node budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact evaluation is not available for the input; use numeric mode.
struct ExactModeUnavailable : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace gtkit
