#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace curveflow {

/// Dense univariate polynomial sum c[k] x^k in a local coordinate.
/// Used for the per-segment pieces of periodic splines and for the
/// piecewise-polynomial expressions derived from them (curvature numerators,
/// convexity condition). Degrees stay small (<= ~20).
class Poly {
 public:
  Poly() : c_(1, 0.0) {}
  explicit Poly(std::vector<double> coeffs);
  static Poly constant(double v) { return Poly(std::vector<double>{v}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<double>& coeffs() const { return c_; }
  double operator[](int k) const { return c_[static_cast<size_t>(k)]; }

  double eval(double x) const;

  /// Value and derivatives up to `order` at x (order + 1 numbers).
  void eval_jet(double x, int order, double* out) const;

  Poly derivative() const;
  Poly antiderivative() const;  // constant term 0
  double integral(double a, double b) const;

  /// Coefficients of p(x + delta) (Taylor shift).
  Poly shifted(double delta) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(double s) const;

  /// max |p| over [a, b], sampled at `samples` points plus the endpoints.
  /// A sampled estimate is all the degeneracy checks need.
  double sup_on(double a, double b, int samples = 24) const;

  /// True when |p| is certified positive on [a, b] by the coefficient
  /// bound around the interval midpoint. Never excludes an actual root.
  bool certainly_nonzero_on(double a, double b) const;

  /// All real roots in [a, b], each located to an x-resolution of 1e-14 and
  /// |p(root)| <= value_tol. Roots of even multiplicity are reported when the
  /// polynomial value at a stationary point falls below value_tol. Roots
  /// closer than min_sep are merged.
  std::vector<double> roots_on(double a, double b, double value_tol,
                               double min_sep = 1e-9) const;

 private:
  std::vector<double> c_;
};

}  // namespace curveflow
