#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace manp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad partition text, dimension or field mismatch, bad JSON.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  NotNilpotent() : Error("matrix is not nilpotent") {}
  using Error::Error;
};

/// An operation was called on input outside its documented domain.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Requested enumeration would visit base^exponent candidates, more than allowed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t base, std::uint64_t exponent, std::uint64_t budget)
      : Error("enumeration needs " + std::to_string(base) + "^" + std::to_string(exponent) +
              " candidates, budget is " + std::to_string(budget)),
        base_(base),
        exponent_(exponent),
        budget_(budget) {}

  std::uint64_t base() const noexcept { return base_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t base_;
  std::uint64_t exponent_;
  std::uint64_t budget_;
};

/// No mutually annihilating pair realizes the requested shapes.
class Incompatible : public Error {
 public:
  using Error::Error;
};

/// A machine check of an internal postcondition failed. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// A constructed witness pair failed validation.
class ConstructionMismatch : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

/// Two independent implementations of the same set disagreed.
class DiscrepancyError : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

}  // namespace manp
