#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in Z[zeta_d] for different d.
class ModulusMismatch : public Error {
 public:
  ModulusMismatch(int lhs, int rhs)
      : Error("modulus mismatch: d=" + std::to_string(lhs) + " vs d=" + std::to_string(rhs)) {}
};

/// A caller-side precondition was violated (bad index, non-real scalar, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal exactness check failed. Seeing this means an arithmetic bug.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Text input did not match a grammar; `position()` is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace prym
