#pragma once

#include <stdexcept>
#include <string>

namespace plink {

/// Malformed or inconsistent input (bad syntax, invalid diagram, non-prime modulus).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation was refused because it would exceed a configured resource limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder.
class DivisibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace plink
