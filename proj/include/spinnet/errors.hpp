#pragma once

#include <stdexcept>
#include <string>

namespace spinnet {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (non-admissible triple, arity mismatch, singular matrix, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when a computation would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinnet
