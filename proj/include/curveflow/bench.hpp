#pragma once

#include <functional>
#include <string>

#include "curveflow/curvegeom.hpp"
#include "curveflow/meshing.hpp"

namespace curveflow {

/// Parameters of the benchmark curve catalog. Only the fields a given curve
/// uses are read; defaults follow the values used throughout the study.
struct CatalogParams {
  double a = 1.0;        // ellipse semi-axes
  double b = 0.5;
  double delta = 0.05;   // n-fold cosine amplitude
  double xi = 0.01;      // symmetry-breaking second harmonic
  int n_sym = 3;         // fold count of the dn / cn families
  double radius = 0.5;   // circle
  double rotation = 0.0; // rigid rotation applied to the curve
};

/// Closed-form radial function about its natural reference point, with exact
/// derivatives.
struct CatalogCurve {
  std::string name;
  std::function<double(double)> r, dr, d2r, d3r;

  double kappa(double phi) const;  // signed curvature at phase phi
};

/// Known names: circle, standard, sine25, sine57, ellipse, dn, cn
/// (aliases d3..d8 / c3..c8 fix n_sym and the catalog delta).
CatalogCurve catalog_formula(const std::string& name, const CatalogParams& p);

/// Closed-form curve re-referenced to its exact centroid; central phases are
/// resolved by Newton ray intersection against the formula.
class CentralCurve {
 public:
  CentralCurve(CatalogCurve formula, Vec2 centroid);

  const CatalogCurve& formula() const { return formula_; }
  Vec2 centroid() const { return centroid_; }

  /// Source phase phi with angle(gamma(phi) - centroid) = psi.
  double phi_at(double psi) const;
  double radial(double psi) const;
  /// Curvature of the curve point seen at central phase psi.
  double kappa(double psi) const;

 private:
  CatalogCurve formula_;
  Vec2 centroid_;
};

CentralCurve central_form(const std::string& name, const CatalogParams& p);

/// Sample the closed form on the requested uniform mesh (about the formula's
/// reference point) and fit.
CurveState catalog_curve(const std::string& name, const CatalogParams& p,
                         int n, MeshPolicy::Kind kind);

/// Same, but on a uniform mesh in the central frame, referenced to the exact
/// centroid. This is the state evolution runs start from.
CurveState catalog_curve_centered(const std::string& name, const CatalogParams& p,
                                  int n, MeshPolicy::Kind kind);

/// Radius of the shrinking circle of initial radius r0 at time t, and the
/// extinction time. Closed forms for the curve-shortening and constant-speed
/// cases; otherwise the time integral t(R) is evaluated by quadrature after
/// the substitution w = rho^alpha and inverted by bisection.
double circle_oracle_radius(double r0, const FlowParams& params, double t,
                            bool force_general = false);
double circle_oracle_tmax(double r0, const FlowParams& params,
                          bool force_general = false);

/// Isoperimetric quotient of the regular n-gon: (pi/n) cot(pi/n).
double ngon_quotient(int n);

/// Homothetic n-fold symmetric profiles exist iff alpha < 1 / (n^2 - 1).
bool dn_admissible(int n, double alpha);

}  // namespace curveflow
