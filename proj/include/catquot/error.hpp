#pragma once

#include <stdexcept>
#include <string>

namespace catquot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: a text file, a relation that is not a partial order,
/// a generator that is not an automorphism.
class InputError : public Error {
public:
  using Error::Error;
};

/// Text parsing failure; carries the 1-based line number, or 0 when the
/// problem is not tied to one line (a missing declaration).
class ParseError : public InputError {
public:
  ParseError(int line, const std::string &msg)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

/// An operation was called on data violating its documented precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A built-in self-check failed. Indicates a bug, never a user error.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace catquot
