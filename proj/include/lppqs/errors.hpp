#pragma once

#include <stdexcept>
#include <string>

namespace lppqs {

/// An input violates a mathematical precondition (interlacing, domain, bound).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pruned enumeration would exceed its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (filling grids, pattern files, rationals).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lppqs
