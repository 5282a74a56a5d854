#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdeg {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph construction / input errors.
struct InvalidEdge : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct InvalidFamilyParameter : Error {
  using Error::Error;
};

// Text format errors. `offset` is the byte position of the first bad byte.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& what, std::size_t at)
      : Error(what + " (byte " + std::to_string(at) + ")"), offset(at) {}
};

// Domain errors.
struct EmptyGraphNoLadder : Error {
  using Error::Error;
};
struct NotDivisible : Error {
  using Error::Error;
};
struct NotApplicable : Error {
  using Error::Error;
};
struct InvalidSubset : Error {
  using Error::Error;
};
struct DecompositionFailed : Error {
  using Error::Error;
};

// Resource caps.
struct SubsetBudgetExceeded : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

// A computed value contradicts an identity that must hold for correct code.
// Seeing one of these always means a bug, never bad input.
struct InternalInconsistency : Error {
  using Error::Error;
};

// Two independent routes to the same quantity disagreed.  Thrown by the
// checkers so that sweeps can record the offending graph.
struct TheoremViolation : Error {
  using Error::Error;
};

}  // namespace hdeg
