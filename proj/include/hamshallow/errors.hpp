#pragma once

#include <stdexcept>
#include <string>

namespace hamshallow {

// Numeric argument outside its admissible range (delta out of (0,1/2],
// beta <= 0, qubit count over the desk-scale cap, ...).
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structurally invalid input: mixed parity where definite parity is
// required, malformed documents, unsupported spec nesting.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative solver exhausted its budget without certifying the result.
// Carries the best residual reached so callers can report it.
class solver_error : public std::runtime_error {
 public:
  solver_error(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual(best_residual) {}

  double best_residual;
};

}  // namespace hamshallow
