#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strata {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position` is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Violated precondition of a numeric or combinatorial routine.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace strata
