#pragma once

#include <stdexcept>
#include <string>

namespace heis {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two arguments that must be distinct coincide (or are closer than the
/// repeated-point tolerance).
class RepeatedPointError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a map, e.g. inversion at the origin.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An angle triple that does not satisfy cos a + cos b + cos c = 3/2.
class OffSurfaceError : public Error {
 public:
  OffSurfaceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A triple whose pairwise distances disagree beyond tolerance.
class NotEquidistantError : public Error {
 public:
  NotEquidistantError(const std::string& what, double spread)
      : Error(what), spread_(spread) {}
  /// (max - min) / max over the three pairwise distances.
  double spread() const noexcept { return spread_; }

 private:
  double spread_;
};

}  // namespace heis
