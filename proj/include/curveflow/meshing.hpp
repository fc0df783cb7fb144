#pragma once

#include "curveflow/curvegeom.hpp"
#include "curveflow/spline.hpp"

namespace curveflow {

struct MeshPolicy {
  enum class Kind { PhaseUniform, ArclengthUniform };
  Kind kind = Kind::PhaseUniform;
  int n0 = 80;          // initial node count
  int remesh_every = 10;  // step period, 0 = never
  bool adapt_n = false;
  int n_min = 40;
  int n_max = kDefaultMaxNodes;
};

/// Nodes phi_j = -pi + 2 pi j / N.
PhaseMesh phase_uniform_mesh(int n);

/// Nodes with s(phi_j) = j L / N, phi_0 = -pi, each located by monotone root
/// finding on the cumulative arclength to |s - jL/N| <= 1e-10 L.
PhaseMesh arclength_uniform_mesh(const CurveState& state, int n);

/// clamp(round(L / target_spacing), n_min, n_max).
int adapt_mesh_size(double arclength, double target_spacing, int n_min, int n_max);

/// Resample the curve on a fresh uniform mesh of the policy's kind and refit;
/// reference point and time stamp are unchanged. When the policy adapts N,
/// `target_spacing` (usually L0/N0 of the run's initial state) sets the goal;
/// zero keeps the current spacing L/n0.
CurveState remesh(const CurveState& state, const MeshPolicy& policy,
                  double target_spacing = 0.0);

}  // namespace curveflow
