#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankforge {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line` is 1-origin; 0 means "not line-addressable".
struct ParseError : Error {
  std::size_t line = 0;
  explicit ParseError(const std::string& msg, std::size_t line_no = 0)
      : Error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};

/// Caller violated an operation's stated precondition.
struct PreconditionError : Error {
  using Error::Error;
};

/// Operation is undefined for the given values (e.g. a * entry where a total
/// matrix is required).
struct UnsupportedError : Error {
  using Error::Error;
};

/// An assembled object failed its own invariants. `index` points at the
/// offending element when there is one (SIZE_MAX otherwise).
struct ConstructionError : Error {
  std::size_t index;
  explicit ConstructionError(const std::string& msg, std::size_t idx = static_cast<std::size_t>(-1))
      : Error(msg), index(idx) {}
};

}  // namespace rankforge
