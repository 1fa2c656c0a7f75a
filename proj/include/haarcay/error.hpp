#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace haarcay {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A constructor or operation was called with arguments violating its
/// preconditions (bad family parameters, non-normal subgroup, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A configured size cap was exceeded (group order, vertex count, |Aut|).
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A search ran out of its node budget before reaching a definitive answer.
/// Distinct from a negative result.
class BudgetExhausted : public Error {
public:
  BudgetExhausted(const std::string& what, std::uint64_t nodes)
      : Error(what), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

private:
  std::uint64_t nodes_;
};

/// Internal consistency check failure. Thrown by `check()` when a
/// postcondition that should hold by construction does not.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

inline void check(bool cond, const char* what) {
  if (!cond) throw InvariantViolation(what);
}

}  // namespace haarcay
