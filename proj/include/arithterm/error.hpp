#pragma once

#include <stdexcept>
#include <string>

namespace arithterm {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation failure: an unbound variable, an exponent that does not fit a
/// machine word, or division by zero under signed semantics.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Rejected operand or parameter: out-of-domain formula arguments, a natural
/// subtraction that would underflow, or a coefficient too large to pack.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Syntax error, carrying the byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Requested an arithmetic term for a formula that provably has none.
class NoTermError : public Error {
 public:
  using Error::Error;
};

}  // namespace arithterm
