#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A family handed to refine_to_frame contains two subspaces that are not
/// compatible. `first` and `second` index the offending pair in the input.
class IncompatibleFamily : public Error {
 public:
  IncompatibleFamily(std::size_t first, std::size_t second)
      : Error("incompatible family: subspaces " + std::to_string(first) + " and " +
              std::to_string(second) + " do not commute"),
        first(first),
        second(second) {}
  std::size_t first;
  std::size_t second;
};

class MembershipError : public Error {
 public:
  using Error::Error;
};

class ThresholdViolation : public Error {
 public:
  using Error::Error;
};

class ProjectionClass : public Error {
 public:
  using Error::Error;
};

class NoRoom : public Error {
 public:
  using Error::Error;
};

class NotAnEigenline : public Error {
 public:
  using Error::Error;
};

}  // namespace cpt
