#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace m2tc {

/// Malformed edge-list input. `line()` is 1-based; 0 when the error is not
/// tied to a particular line (e.g. the file ended early).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on the input graph does not hold (not strongly connected,
/// unreachable vertex, bad tree, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a graph handed to the sparsifier is not 2-T-connected.
class NotTwoTConnected : public InvalidInput {
 public:
  enum class Reason { too_small, not_two_edge_connected, terminal_is_articulation_point };

  NotTwoTConnected(Reason reason, const std::string& what) : InvalidInput(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// An internal certificate failed (e.g. two trees that should be independent
/// are not). Always a bug, never an input problem.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace m2tc
