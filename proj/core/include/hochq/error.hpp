#pragma once

#include <stdexcept>
#include <string>

namespace hochq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands that cannot be combined (mismatched ranks, orders, arities).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented invariant. `code()` names the rule and
/// `location()` the offending indices or element.
class ValidationError : public Error {
 public:
  ValidationError(std::string code, std::string location, const std::string& what)
      : Error(what + " [" + code + " at " + location + "]"),
        code_(std::move(code)),
        location_(std::move(location)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  std::string code_;
  std::string location_;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A scalar left the exponent box on which a specialization is injective.
class OutOfBoundError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hochq
