#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kempe {

/// Malformed arguments: bad family parameters, out-of-range ids, alpha == beta.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's documented precondition does not hold (disconnected input,
/// partial coloring, delta < 2, H is a Gallai tree, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input text could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::size_t bound)
      : std::runtime_error(what), bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

}  // namespace kempe
