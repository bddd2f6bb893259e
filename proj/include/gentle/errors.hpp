#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gentle {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (quiver files, string literals, JSON).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A mathematical precondition does not hold (non-gentle input, not a
/// string, singular matrix, representation-infinite algebra, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace gentle
