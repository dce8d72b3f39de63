#pragma once

#include <stdexcept>
#include <string>

namespace qsched {

/// Bad argument to a public operation (wrong length, empty name, mixed
/// registries, non-positive parameter, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A monomial of degree >= 3 reached an operation that needs a quadratic form.
class DegreeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The model carries no coefficient at all, so no temperature scale exists.
class DegenerateModelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A scheduling instance violates its own parameter invariants.
class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive enumeration was asked for a problem above its size cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace qsched
