#pragma once

#include <stdexcept>
#include <string>

namespace qsd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters violate a precondition (1 < k < v, k > x > y >= 0, lambda >= 1, ...).
class InvalidParameters : public Error {
 public:
  using Error::Error;
};

/// The requested object is not a design (e.g. a complement with lambda' <= 0).
class NotADesign : public Error {
 public:
  using Error::Error;
};

/// The block graph is degenerate: b <= v, S = -1, or one intersection number never occurs.
class DegenerateGraph : public Error {
 public:
  using Error::Error;
};

/// A formula would divide by zero at the given arguments.
class UndefinedValue : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (candidate cap, rejection budget) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace qsd
