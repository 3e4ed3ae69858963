#pragma once

#include <stdexcept>
#include <string>

namespace flatdef {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (vector length, ambient dimension, alphabet).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `position` is a 0-based byte offset into the source.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input data that parses but violates a domain precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace flatdef
