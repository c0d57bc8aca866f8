#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liesym {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. Carries the byte offset of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}

  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

/// A derivative or substitution would exceed the configured jet order cap.
class OrderError : public Error {
public:
  using Error::Error;
};

/// Structurally valid input that falls outside the supported class of an
/// operation (non-monomial divisor, generator shape the reducer cannot
/// handle, and so on).
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// Results computed at independent parameter points disagree, so a symbolic
/// reconstruction cannot proceed.
class MismatchError : public Error {
public:
  using Error::Error;
};

/// An internal invariant failed. Always a bug, never a user error.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace liesym
