#pragma once

#include <stdexcept>
#include <string>

namespace iepl {

/// Target spectrum is provably not attainable on the requested graph family.
class NotRealizableError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The requested family (or target shape) is outside the solved cases; a
/// definite yes/no answer is deliberately not given.
class UnsupportedFamilyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine failed an internal accuracy check (root residual,
/// sign-pattern verification, ...).
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace iepl
