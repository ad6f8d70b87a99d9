#pragma once

#include <stdexcept>
#include <string>

namespace rectrep {

// Input that is well-formed but violates a semantic requirement: index out of
// range, size mismatch, a non-bijective permutation, an infeasible placement
// handed to an operation that needs a feasible one, and so on.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input (bad JSON, wrong field types, unparsable numbers).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical guarantee was observed to fail at run time. Seeing one of
// these means a bug in this library, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_invariant(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace rectrep
