#pragma once

#include <functional>
#include <vector>

#include "curveflow/geometry.hpp"
#include "curveflow/poly.hpp"

namespace curveflow {

inline constexpr int kSplineDegree = 5;
inline constexpr int kDefaultMaxNodes = 4096;

/// Ordered phases phi_0 < ... < phi_{N-1} in [-pi, pi). Segment j spans
/// [phi_j, phi_{j+1}), the last one wrapping to phi_0 + 2pi.
class PhaseMesh {
 public:
  PhaseMesh() = default;
  /// Validates ordering, range and size (8 <= N <= max_nodes).
  explicit PhaseMesh(std::vector<double> nodes, int max_nodes = kDefaultMaxNodes);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  double node(int j) const { return nodes_[static_cast<size_t>(j)]; }

  /// Right endpoint of segment j (node j+1, lifted past the wrap for j=N-1).
  double segment_end(int j) const {
    return j + 1 < size() ? nodes_[static_cast<size_t>(j) + 1] : nodes_[0] + kTwoPi;
  }
  double segment_length(int j) const { return segment_end(j) - node(j); }

  /// Lift phi into [phi_0, phi_0 + 2pi).
  double lift(double phi) const;
  /// Index of the segment containing phi (after lifting).
  int locate(double phi) const;

  bool operator==(const PhaseMesh& o) const { return nodes_ == o.nodes_; }

 private:
  std::vector<double> nodes_;
};

/// Periodic piecewise polynomial over a PhaseMesh; segment polynomials are in
/// the local coordinate x = phi - phi_j.
class PiecewisePoly {
 public:
  PiecewisePoly() = default;
  PiecewisePoly(PhaseMesh mesh, std::vector<Poly> segments);

  const PhaseMesh& mesh() const { return mesh_; }
  const Poly& segment(int j) const { return segs_[static_cast<size_t>(j)]; }
  int degree() const;

  double eval(double phi) const;
  /// Value and derivatives up to `order` (<= 3 for the public jet contract,
  /// any order supported).
  void eval_jet(double phi, int order, double* out) const;

  PiecewisePoly derivative(int k = 1) const;

  /// Piecewise product / linear combinations (same mesh required).
  PiecewisePoly operator*(const PiecewisePoly& o) const;
  PiecewisePoly operator+(const PiecewisePoly& o) const;
  PiecewisePoly operator-(const PiecewisePoly& o) const;
  PiecewisePoly operator*(double s) const;

  /// Exact integral over one period.
  double integral() const;

  /// Sampled sup norm over the whole domain.
  double sup_norm() const;

  /// Sorted roots in [-pi, pi); every segment is checked against the
  /// degeneracy rule: a segment whose sampled sup falls below
  /// 1e-13 * (global sup) raises DegenerateSegmentError.
  std::vector<double> real_roots() const;

 private:
  PhaseMesh mesh_;
  std::vector<Poly> segs_;
};

/// Periodic spline interpolation of degree kSplineDegree with C^4 continuity.
/// `positive` additionally requires strictly positive data (radial fits).
PiecewisePoly fit_periodic_spline(const PhaseMesh& mesh,
                                  const std::vector<double>& values,
                                  bool positive = true);

enum class L2Mode { Integral, Discrete };

/// L2 distance of two periodic scalar functions. Integral mode integrates
/// per mesh segment (10-point Gauss-Legendre); discrete mode evaluates
/// (1/N) * sqrt(sum_j |f - g|^2) over the mesh nodes.
double l2_distance(const std::function<double(double)>& f,
                   const std::function<double(double)>& g,
                   const PhaseMesh& mesh, L2Mode mode);

}  // namespace curveflow
