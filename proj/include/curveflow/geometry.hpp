#pragma once

#include <cmath>

namespace curveflow {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Plane point / vector. Small enough to pass by value everywhere.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }

  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  /// z-component of the 3D cross product.
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

/// Unit vector at angle phi.
inline Vec2 unit_dir(double phi) { return {std::cos(phi), std::sin(phi)}; }

/// Rotate v by angle a about the origin.
inline Vec2 rotate(Vec2 v, double a) {
  const double c = std::cos(a), s = std::sin(a);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Reduce an angle to the fundamental interval [-pi, pi).
inline double wrap_phase(double phi) {
  double w = std::remainder(phi, kTwoPi);
  if (w >= kPi) w -= kTwoPi;  // remainder may return exactly pi
  return w;
}

/// Distance between two phases measured around the circle, in [0, pi].
inline double phase_distance(double a, double b) {
  return std::fabs(std::remainder(a - b, kTwoPi));
}

}  // namespace curveflow
