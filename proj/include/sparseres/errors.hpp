#pragma once

#include <stdexcept>

namespace sparseres {

// Malformed or inconsistent input (support violations, arity mismatches).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The genericity hypotheses of the evaluation formulas fail for this input
// (a directional resultant vanishes, a declared extreme coefficient is zero).
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The computation is valid but numerically unresolvable at this precision.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sparseres
