#pragma once

#include <stdexcept>
#include <string>

namespace excentric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite input, bad interval, non-positive step or tolerance.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The ex-centric variable lies outside the existence interval, or the
/// discriminant 1 - k^2 sin^2(theta - eps) is negative.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// A denominator (Rex or the square-root discriminant) vanishes.
class Singularity : public Error {
 public:
  using Error::Error;
};

}  // namespace excentric
