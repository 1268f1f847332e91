#pragma once

#include <stdexcept>
#include <string>

namespace lcg {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad inputs: parameter invariants, malformed files, out-of-range arguments.
// The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
  using Error::Error;
};

class RangeError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Refusal to enumerate past a configured budget.
class BudgetError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Planning/search outcomes that are failures for the caller (exit code 3).
class PlanError : public Error {
public:
  using Error::Error;
};

class DecodeError : public Error {
public:
  using Error::Error;
};

}  // namespace lcg
