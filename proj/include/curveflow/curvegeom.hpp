#pragma once

#include <vector>

#include "curveflow/geometry.hpp"
#include "curveflow/spline.hpp"

namespace curveflow {

/// Parameters (c, alpha) of the normal velocity law v = c + kappa^alpha.
/// With signed_power set, kappa^alpha for negative curvature means
/// sign(kappa) * |kappa|^alpha (odd extension); alpha = 0 gives v = c + 1.
struct FlowParams {
  double c = 0.0;
  double alpha = 1.0;
  bool signed_power = true;

  FlowParams() = default;
  FlowParams(double c_, double alpha_, bool signed_power_ = true);
};

/// One immutable snapshot of a star-like curve: the radial spline about its
/// reference point, plus cached observables.
class CurveState {
 public:
  CurveState(PiecewisePoly radial, Vec2 refpoint, double time);

  const PiecewisePoly& radial() const { return radial_; }
  const PhaseMesh& mesh() const { return radial_.mesh(); }
  Vec2 refpoint() const { return ref_; }
  double time() const { return time_; }

  double area() const { return area_; }
  double total_arclength() const { return arclength_; }
  Vec2 centroid() const { return centroid_; }
  double max_abs_kappa() const { return max_abs_kappa_; }
  double isoperimetric_quotient() const { return quotient_; }

  /// Cumulative arclength measured from phase -pi, strictly increasing.
  double arclength_to(double phi) const;

 private:
  PiecewisePoly radial_;
  Vec2 ref_;
  double time_ = 0.0;
  double area_ = 0.0;
  double arclength_ = 0.0;
  Vec2 centroid_;
  double max_abs_kappa_ = 0.0;
  double quotient_ = 0.0;
  std::vector<double> arc_prefix_;  // arclength of segments 0..j-1 from node 0
};

Vec2 gamma(const CurveState& state, double phi);
/// Inward unit normal i * gamma' / |gamma'|.
Vec2 normal(const CurveState& state, double phi);
/// Signed curvature (r(r - r'') + 2 r'^2) / (r^2 + r'^2)^(3/2).
double curvature(const CurveState& state, double phi);

double area(const CurveState& state);
Vec2 centroid(const CurveState& state);
double arclength(const CurveState& state, double phi);
double total_arclength(const CurveState& state);
double isoperimetric_quotient(const CurveState& state);

/// Decided by root analysis of the piecewise polynomial
/// r^2 + 2 r'^2 - r r'', not by sampling.
bool is_convex(const CurveState& state);

/// True iff P lies strictly inside and every ray from P meets the curve
/// transversely (the polar angle about P is strictly monotone).
bool is_reference_point(const CurveState& state, Vec2 p);

struct SymmetryOp {
  enum class Kind { Rotation, Reflection };
  Kind kind;
  int fold = 1;        // rotation by 2*pi/fold
  double axis = 0.0;   // reflection axis angle

  static SymmetryOp rotation(int fold);
  static SymmetryOp reflection(double axis_angle);
};

/// Sup over 1000 uniform phases of the residual of the symmetry relation on
/// the radial distance function (meaningful for the central parameterization).
double symmetry_residual(const CurveState& state, const SymmetryOp& op);

// --- support used by the flow engine and critical-point detectors ---------

/// Radial values and the (cyclically sorted) phase mesh of a point set viewed
/// from `ref`. Throws StarLikenessLostError when the points are not angularly
/// monotone about ref.
struct PolarPoints {
  PhaseMesh mesh;
  std::vector<double> values;
};
PolarPoints polar_about(const std::vector<Vec2>& points, Vec2 ref);

/// Enclosed area of a radial spline (exact per-segment integration).
double area_of(const PiecewisePoly& radial);
/// Centroid of the region bounded by a radial spline about `ref`.
Vec2 centroid_of(const PiecewisePoly& radial, Vec2 ref);

/// Numerator polynomials of kappa and kappa': kappa = P * Q^(-3/2) with
/// P = r(r - r'') + 2 r'^2 and Q = r^2 + r'^2, and
/// kappa' = N * Q^(-5/2) with N = 2 P' Q - 3 P Q' (doubled to stay integral).
struct CurvatureParts {
  PiecewisePoly p;
  PiecewisePoly q;
  PiecewisePoly dnum;
};
CurvatureParts curvature_parts(const PiecewisePoly& radial);

/// Max of |kappa| located by root-finding on the kappa' numerator
/// (plus the knots), never by node sampling.
double max_abs_curvature(const PiecewisePoly& radial);

/// Refit the same geometric curve about a new reference point by resampling
/// the current mesh points.
CurveState re_reference(const CurveState& state, Vec2 new_ref);

}  // namespace curveflow
