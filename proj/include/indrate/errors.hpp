#pragma once

#include <stdexcept>
#include <string>

namespace indrate {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generator-set validation failures.
struct NotCommutingError : Error {
  using Error::Error;
};
struct NotIndependentError : Error {
  using Error::Error;
};
struct ZeroRowError : Error {
  using Error::Error;
};

// Code-string parsing failures.
struct BadCharacterError : Error {
  using Error::Error;
};
struct LengthMismatchError : Error {
  using Error::Error;
};

// Channel construction failure (no root with valid flip probabilities).
struct NoValidRootError : Error {
  using Error::Error;
};

// Evaluation caps, see EvalLimits.
struct MemoryCapExceededError : Error {
  using Error::Error;
};
struct CosetCapExceededError : Error {
  using Error::Error;
};

// Search budget precondition (2^N_free must not exceed the DFS budget).
struct BudgetExceededError : Error {
  using Error::Error;
};

// Bisection endpoints do not straddle a sign change.
struct NoBracketError : Error {
  using Error::Error;
};

}  // namespace indrate
