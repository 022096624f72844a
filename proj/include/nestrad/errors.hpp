#pragma once

#include <stdexcept>
#include <string>

namespace nestrad {

// Square root requested for an interval whose lower endpoint is negative.
// The radical chain keeps its radicands positive mathematically, so this
// always means a precision bug upstream, never a data error.
class NegativeOperand : public std::domain_error {
 public:
  explicit NegativeOperand(const std::string& what) : std::domain_error(what) {}
};

// Division by an interval that contains zero (or, for one-sided division,
// whose lower endpoint is not strictly positive).
class DivisorStraddlesZero : public std::domain_error {
 public:
  explicit DivisorStraddlesZero(const std::string& what) : std::domain_error(what) {}
};

// An escalation loop hit the configured working-precision ceiling before it
// could certify its result. Callers may raise the ceiling and retry.
class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

// The doubling recurrence and a direct recomputation disagreed. This is an
// internal inconsistency: table construction aborts rather than repairs.
class RecurrenceMismatch : public std::logic_error {
 public:
  explicit RecurrenceMismatch(const std::string& what) : std::logic_error(what) {}
};

// File I/O failure, with the offending path in the message.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nestrad
