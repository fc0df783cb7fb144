#pragma once

// Shared fixtures for the unit suites: uniform meshes, closed-form test
// curves and brute-force oracles that stay independent of the library path
// they check.

#include <cmath>
#include <functional>
#include <vector>

#include "curveflow/curvegeom.hpp"
#include "curveflow/spline.hpp"

namespace cf_test {

using curveflow::kPi;
using curveflow::kTwoPi;
using curveflow::Vec2;

inline curveflow::PhaseMesh uniform_mesh(int n) {
  std::vector<double> nodes(n);
  for (int j = 0; j < n; ++j) nodes[j] = -kPi + kTwoPi * j / n;
  return curveflow::PhaseMesh(std::move(nodes));
}

inline curveflow::PiecewisePoly fit_function(
    const std::function<double(double)>& f, int n, bool positive = true) {
  curveflow::PhaseMesh mesh = uniform_mesh(n);
  std::vector<double> vals(n);
  for (int j = 0; j < n; ++j) vals[j] = f(mesh.node(j));
  return curveflow::fit_periodic_spline(mesh, vals, positive);
}

inline curveflow::CurveState make_state(const std::function<double(double)>& f,
                                        int n, Vec2 ref = {0.0, 0.0},
                                        double t = 0.0) {
  return curveflow::CurveState(fit_function(f, n), ref, t);
}

inline double standard_r(double phi) {
  return 0.5 + 0.04 * std::sin(2 * phi) + 0.03 * std::sin(3 * phi);
}

inline std::function<double(double)> ellipse_r(double a, double b) {
  return [a, b](double phi) {
    const double bc = b * std::cos(phi), as = a * std::sin(phi);
    return a * b / std::sqrt(bc * bc + as * as);
  };
}

inline std::function<double(double)> star3_r() {
  return [](double phi) { return 0.5 + 0.2 * std::sin(3 * phi); };
}

// Trapezoid-rule centroid of an analytic polar curve about the origin
// (independent quadrature oracle).
inline Vec2 brute_centroid(const std::function<double(double)>& f,
                           int samples = 1000000) {
  double ax = 0.0, ay = 0.0, area2 = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double phi = -kPi + kTwoPi * i / samples;
    const double r = f(phi);
    area2 += r * r;
    const double r3 = r * r * r;
    ax += r3 * std::cos(phi);
    ay += r3 * std::sin(phi);
  }
  const double h = kTwoPi / samples;
  const double area = 0.5 * area2 * h;
  return {ax * h / (3.0 * area), ay * h / (3.0 * area)};
}

// Ray-fan admissibility oracle: casts `rays` rays from p against a dense
// polygonal sampling of the curve and checks that each hits exactly once.
inline bool ray_fan_admissible(const std::function<double(double)>& f, Vec2 p,
                               int rays = 10000, int poly_n = 4000) {
  std::vector<Vec2> poly(poly_n);
  for (int i = 0; i < poly_n; ++i) {
    const double phi = -kPi + kTwoPi * i / poly_n;
    poly[i] = f(phi) * curveflow::unit_dir(phi);
  }
  for (int k = 0; k < rays; ++k) {
    const Vec2 d = curveflow::unit_dir(-kPi + kTwoPi * k / rays);
    int hits = 0;
    for (int i = 0; i < poly_n; ++i) {
      const Vec2 a = poly[i] - p;
      const Vec2 b = poly[(i + 1) % poly_n] - p;
      const double ca = d.cross(a), cb = d.cross(b);
      if ((ca > 0) == (cb > 0)) continue;
      const double t = ca / (ca - cb);
      const Vec2 hit = a + t * (b - a);
      if (d.dot(hit) > 0) ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace cf_test
