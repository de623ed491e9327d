#ifndef JETFIBER_ERRORS_HPP
#define JETFIBER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetfiber {

/// Malformed polynomial text. `position()` is the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A Groebner computation ran past its reduction budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A contract precondition was violated by the caller (bad order, bad index, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent would exceed the per-variable bound.
class DegreeOverflow : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// A mechanical check of a mathematical claim came out false.
class VerificationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace jetfiber

#endif  // JETFIBER_ERRORS_HPP
