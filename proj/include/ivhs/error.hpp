#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ivhs {

/// Invalid input to one of the library operations. `field()` names the
/// offending argument so front ends can point at it.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Syntax error in polynomial text, with the zero-based character offset.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : ValidationError("poly", message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Two forms that were expected to be a regular sequence are not: the
/// Hilbert function of the quotient departs from the Koszul count.
class RegularSequenceError : public ValidationError {
 public:
  RegularSequenceError(int degree, long expected, long actual)
      : ValidationError("c", "not a regular sequence: degree " + std::to_string(degree) +
                                 " quotient has dimension " + std::to_string(actual) +
                                 ", Koszul count " + std::to_string(expected)),
        degree_(degree),
        expected_(expected),
        actual_(actual) {}

  int degree() const noexcept { return degree_; }
  long expected() const noexcept { return expected_; }
  long actual() const noexcept { return actual_; }

 private:
  int degree_;
  long expected_;
  long actual_;
};

}  // namespace ivhs
