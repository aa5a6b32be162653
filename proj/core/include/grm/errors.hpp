#pragma once

#include <stdexcept>
#include <string>

namespace grm {

/// Malformed or inconsistent input (files, literals, preconditions).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured budget. Never downgraded to a
/// guess; callers either raise the budget or treat the instance as out of
/// reach.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic left the supported precision.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace grm
