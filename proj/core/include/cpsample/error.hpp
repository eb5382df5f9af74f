#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpsample {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or configuration value supplied by the caller.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Row/column counts that do not agree with the graph.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Precondition of an operation violated (e.g. a core node passed where a
/// periphery node is required, or a query on a nonexistent edge).
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpsample
