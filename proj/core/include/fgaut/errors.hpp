#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fgaut {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands built over different bases were combined.
class BasisMismatch : public Error {
public:
  BasisMismatch() : Error("basis mismatch") {}
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position),
        detail_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  std::size_t position_;
  std::string detail_;
};

// Raised when an argument lies outside an operation's domain (wrong rank, index out of
// range, parameter outside a factor, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace fgaut
