#pragma once

#include <stdexcept>
#include <string>

namespace blockbetti {

/// Malformed graph input. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured computation budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes that must agree disagreed.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace blockbetti
