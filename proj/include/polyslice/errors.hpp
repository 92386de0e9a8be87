#pragma once

#include <stdexcept>
#include <string>

namespace polyslice {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (dimension mismatch, bad parameters,
/// non-extreme vertices, unparsable files).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A span that should have full rank does not, or a polytope lies in a
/// hyperplane.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// A construction could not be completed (e.g. no valid stacking apex).
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A hyperplane does not meet the polytope, so no slice exists.
class NoIntersectionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace polyslice
