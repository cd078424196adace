#pragma once

#include <stdexcept>
#include <string>

namespace univjac {

// Input outside the domain of an operation (g < 3, malformed graph, wrong basis).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Index argument (boundary index i, family parameter h) out of range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A test family requested outside the degree range where it is defined.
class NotApplicable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A structural check (independence matrix, invariant sweep) failed.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace univjac
