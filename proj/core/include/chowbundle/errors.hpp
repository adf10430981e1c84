#pragma once

#include <stdexcept>
#include <string>

namespace chowbundle {

// Operands that cannot be combined: different rings, different truncation
// orders, missing variables.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An operation was called outside of its domain (non-unit constant term,
// order beyond what a formula asserts, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A mathematical assertion that the library checks at runtime did not hold.
// `name()` is a stable identifier for the violated assertion.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace chowbundle
