#ifndef QBIF_ERRORS_HPP
#define QBIF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qbif {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// A configurable resource cap (degree cap, tuple cap, ...) was exceeded.
class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& what) : Error(what) {}
};

/// A requested object (attracting cycle, validated root, ...) does not exist.
class NotFound : public Error {
 public:
  explicit NotFound(const std::string& what) : Error(what) {}
};

/// Too few samples reached the regime needed for the requested statistic.
class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& what) : Error(what) {}
};

/// Interpolation detected significant coefficients at the degree bound.
class DegreeBoundExceeded : public Error {
 public:
  explicit DegreeBoundExceeded(const std::string& what) : Error(what) {}
};

}  // namespace qbif

#endif  // QBIF_ERRORS_HPP
