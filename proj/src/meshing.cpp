#include "curveflow/meshing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "curveflow/errors.hpp"

namespace curveflow {

PhaseMesh phase_uniform_mesh(int n) {
  if (n < 8) throw std::invalid_argument("phase_uniform_mesh: n < 8");
  std::vector<double> nodes(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) nodes[static_cast<size_t>(j)] = -kPi + kTwoPi * j / n;
  return PhaseMesh(std::move(nodes));
}

PhaseMesh arclength_uniform_mesh(const CurveState& state, int n) {
  if (n < 8) throw std::invalid_argument("arclength_uniform_mesh: n < 8");
  const double total = state.total_arclength();
  const double tol = 1e-10 * total;
  std::vector<double> nodes(static_cast<size_t>(n));
  nodes[0] = -kPi;
  double lo = -kPi;
  for (int j = 1; j < n; ++j) {
    const double target = total * j / n;
    double hi = kPi;
    if (!(state.arclength_to(hi) >= target))
      throw Error("arclength_uniform_mesh: cumulative arclength not monotone");
    // bisection with Newton polish; s' = |gamma'| > 0
    double x = lo + (hi - lo) * 1.0 / (n - j + 1);
    for (int it = 0; it < 200; ++it) {
      const double s = state.arclength_to(x);
      if (std::fabs(s - target) <= tol) break;
      if (s < target)
        lo = x;
      else
        hi = x;
      double jet[2];
      state.radial().eval_jet(x, 1, jet);
      const double speed = std::hypot(jet[0], jet[1]);
      double xn = x - (s - target) / speed;
      if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
      x = xn;
    }
    nodes[static_cast<size_t>(j)] = x;
    lo = x;
  }
  return PhaseMesh(std::move(nodes));
}

int adapt_mesh_size(double arclength, double target_spacing, int n_min, int n_max) {
  if (!(target_spacing > 0.0))
    throw std::invalid_argument("adapt_mesh_size: target spacing must be positive");
  const double raw = std::round(arclength / target_spacing);
  return static_cast<int>(std::clamp(raw, static_cast<double>(n_min),
                                     static_cast<double>(n_max)));
}

CurveState remesh(const CurveState& state, const MeshPolicy& policy,
                  double target_spacing) {
  int n = policy.n0;
  if (policy.adapt_n) {
    const double spacing =
        target_spacing > 0.0 ? target_spacing : state.total_arclength() / policy.n0;
    n = adapt_mesh_size(state.total_arclength(), spacing, policy.n_min, policy.n_max);
  }
  PhaseMesh mesh = policy.kind == MeshPolicy::Kind::PhaseUniform
                       ? phase_uniform_mesh(n)
                       : arclength_uniform_mesh(state, n);
  std::vector<double> values(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    values[static_cast<size_t>(j)] = state.radial().eval(mesh.node(j));
  return CurveState(fit_periodic_spline(mesh, values), state.refpoint(), state.time());
}

}  // namespace curveflow
