#pragma once

#include <stdexcept>
#include <string>

namespace gtl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input: polynomials, graphs, words, trace tables.
struct ParseError : Error {
  using Error::Error;
};

// An operation was called outside its domain.
struct PreconditionError : Error {
  using Error::Error;
};

// Closure size, element count or bound guard tripped.
struct CapExceeded : Error {
  using Error::Error;
};

// Two computations that must agree did not.
struct ConsistencyError : Error {
  using Error::Error;
};

// A trace table has no value for a required element.
struct TableGap : Error {
  using Error::Error;
};

}  // namespace gtl
