#pragma once

#include <stdexcept>
#include <string>

namespace ieh {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or parameter value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Operands with incompatible dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, long line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  explicit ParseError(const std::string& message) : Error(message), line_(0) {}

  long line() const { return line_; }

 private:
  long line_;
};

/// Filesystem or stream failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ieh
