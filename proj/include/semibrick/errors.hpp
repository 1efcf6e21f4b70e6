#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semibrick {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class QuiverMismatch : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidMorphism : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// An object left the dimension window of a universe.
class OutOfBounds : public Error {
 public:
  using Error::Error;
};

/// Base for every "too large to exhaust" condition; the CLI maps these to exit 3.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t estimate)
      : Error(what), estimate_(estimate) {}
  std::uint64_t estimate() const noexcept { return estimate_; }

 private:
  std::uint64_t estimate_;
};

class EnumerationTooLarge : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

class SearchBudgetExceeded : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

class BudgetExceeded : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

}  // namespace semibrick
