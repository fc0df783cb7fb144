#pragma once

#include <stdexcept>
#include <string>

namespace curveflow {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Too few samples for the requested spline degree.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// The interpolation system could not be solved (degenerate mesh spacing).
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Root counting requested on a segment that is numerically flat.
class DegenerateSegmentError : public Error {
 public:
  using Error::Error;
};

/// Vanishing tangent or otherwise unusable curve geometry.
class DegenerateCurveError : public Error {
 public:
  using Error::Error;
};

/// Propagated mesh points are no longer angularly monotone about the
/// reference point; the curve left the star-like class.
class StarLikenessLostError : public Error {
 public:
  using Error::Error;
};

/// Velocity law evaluated outside its domain (negative curvature with a
/// fractional exponent and the signed-power convention disabled).
class FlowDomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace curveflow
