#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homalg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid family parameter, odd n*d for regular enumeration, and similar.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Unreadable input file.
class InputError : public Error {
public:
  using Error::Error;
};

/// Malformed graph text. `line()` is 1-based, 0 when not tied to a line.
class FormatError : public InputError {
public:
  explicit FormatError(const std::string& what, std::size_t line = 0)
      : InputError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A configured size cap would be exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// Operation hypotheses not met (graph not regular, clique present, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

}  // namespace homalg
