#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace syt {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A value violates a type invariant or an operation precondition.
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// Text input that cannot be parsed; `position` is the 1-based character
/// offset of the offending spot in the input string.
struct ParseError : InvalidInput {
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput("parse error at position " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

/// A size limit was exceeded (deliberate ceilings, not resource exhaustion).
struct CapacityError : Error {
  explicit CapacityError(const std::string& what) : Error(what) {}
};

/// Edge input to a poset constructor contains a directed cycle.
struct NotAPartialOrder : Error {
  explicit NotAPartialOrder(const std::string& what) : Error(what) {}
};

/// An internal cross-check failed; indicates a bug, not bad input.
struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace syt
