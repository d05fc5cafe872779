#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jacrees {

/// Bad input from the caller: mixed rings, malformed problem spec, bad flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Impossible arithmetic request (inversion of zero, colon by zero, ...).
class ArithError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression text that does not parse. `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// A bounded search loop ran out of budget; a diagnostic, not a crash.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem-backed consistency check failed. This is an engine bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Cooperative wall-clock deadline expired inside a long computation.
class DeadlineExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jacrees
