#ifndef FXAGG_ERRORS_HPP
#define FXAGG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fxagg {

// Base class for every error this library raises on purpose. Anything else
// escaping the public surface is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data violates a value-level invariant (non-positive rate, NaN, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Vector-length mismatch between an operand and an operation's domain.
class ArityError : public Error {
 public:
  using Error::Error;
};

// A parameter is outside its admissible range (e.g. mixing weight).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Probabilities missing, out of (0,1], or not summing to one exactly.
class ProbabilityError : public Error {
 public:
  using Error::Error;
};

// A candidate reciprocity function fails the exact antisymmetry check.
class ReciprocityViolation : public Error {
 public:
  using Error::Error;
};

// Rational-probability expansion would need more states than the cap allows.
class ExpansionTooLarge : public Error {
 public:
  ExpansionTooLarge(const std::string& what, long long lcm, long long cap)
      : Error(what), lcm_(lcm), cap_(cap) {}

  long long lcm() const noexcept { return lcm_; }
  long long cap() const noexcept { return cap_; }

 private:
  long long lcm_;
  long long cap_;
};

// Malformed scenario or beta-spec file. Carries a position: line/field for
// CSV, byte offset for JSON (line == 0 in that case).
class ParseError : public Error {
 public:
  ParseError(const std::string& reason, std::size_t line, std::size_t field)
      : Error("parse error at line " + std::to_string(line) + ", field " +
              std::to_string(field) + ": " + reason),
        line_(line),
        field_(field) {}

  explicit ParseError(const std::string& reason, std::size_t byte_offset = 0)
      : Error("parse error at byte " + std::to_string(byte_offset) + ": " +
              reason),
        line_(0),
        field_(byte_offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::size_t field_;
};

}  // namespace fxagg

#endif  // FXAGG_ERRORS_HPP
