#pragma once

#include <stdexcept>
#include <string>

namespace factorinv {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension mismatch or otherwise ill-formed linear system / vector pair.
class MalformedSystem : public Error {
 public:
  using Error::Error;
};

/// The homogeneous system has a nonzero solution, so the fiber is infinite.
class InfiniteFiber : public Error {
 public:
  using Error::Error;
};

/// An element was required to lie in the semigroup (or an ideal) and does not.
class InvalidElement : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A block monoid was requested over a modulus below 2.
class InvalidGroup : public Error {
 public:
  using Error::Error;
};

/// A set of factorizations does not factor a single element.
class InvalidFiber : public Error {
 public:
  using Error::Error;
};

/// The configured step cap on kernel completion was exceeded.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace factorinv
