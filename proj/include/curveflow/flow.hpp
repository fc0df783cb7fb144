#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curveflow/curvegeom.hpp"
#include "curveflow/meshing.hpp"

namespace curveflow {

struct RunConfig {
  FlowParams flow;
  MeshPolicy mesh;
  double step_scale = 1e-4;       // S in h = S / max|kappa|
  double h_min = 1e-12;
  double area_min = 1e-12;
  double var_min = 1e-8;          // radial-variance floor
  double kappa_ratio_max = 1e5;   // blow-up guard on max|kappa| / avg(r)
  long max_steps = 2000000;
  int snapshot_every = 10;        // observables are recorded every step
};

enum class StopReason {
  None,
  StepSizeUnderflow,   // (i)   h < h_min
  RadialVarianceFloor, // (ii)  Var(r) < var_min
  AreaFloor,           // (iii) A < A_min
  CurvatureBlowup,     // (iv)  max|kappa| / avg(r) > kappa_ratio_max
  MaxSteps,
  StarLikenessLost,
  DegenerateCurve,
  DomainError,
};

const char* stop_reason_name(StopReason r);
StopReason stop_reason_from_name(const std::string& name);
/// Shrink criteria (ii)-(iv) indicate a run that ended near extinction.
bool is_shrink_stop(StopReason r);

struct StepObservables {
  long step = 0;
  double t = 0.0, h = 0.0;
  double area = 0.0, arclength = 0.0, quotient = 0.0;
  Vec2 centroid;
  double max_abs_kappa = 0.0;
};

/// Compact curve snapshot: enough to refit the spline deterministically.
struct Snapshot {
  long step = 0;
  double t = 0.0;
  Vec2 ref;
  std::vector<double> phases;
  std::vector<double> values;
};

Snapshot make_snapshot(const CurveState& state, long step);
PiecewisePoly snapshot_spline(const Snapshot& snap);
CurveState state_from_snapshot(const Snapshot& snap);

struct EvolutionRecord {
  std::vector<StepObservables> observables;  // per step, including step 0
  std::vector<Snapshot> snapshots;           // subsampled; first and last always
  StopReason stop_reason = StopReason::None;
  std::string stop_detail;
  double t_final = 0.0;
  long steps = 0;
  bool area_monotone = true;  // strict decrease observed along the run
  std::optional<CurveState> final_state;
};

/// Normal speed c + kappa^alpha of the velocity law.
double velocity(const FlowParams& params, double kappa);

/// h = S / max|kappa|, the maximum taken from the cached root-finding result.
double step_size(const CurveState& state, double step_scale);

/// Push every mesh point by h * v * n evaluated from the exact jet.
std::vector<Vec2> euler_step(const CurveState& state, const FlowParams& params,
                             double h);

/// Project propagated points back into the spline space: phases about the
/// previous centroid, fit, fresh centroid, one re-reference pass.
CurveState reproject(const std::vector<Vec2>& points, Vec2 prev_centroid,
                     double time);

struct StopCheck {
  bool stop = false;
  StopReason reason = StopReason::None;
};
StopCheck check_stop(const CurveState& state, double h, const RunConfig& config);

/// Variance and mean of the radial function over 1000 uniform phases.
double radial_variance(const PiecewisePoly& radial);
double radial_mean(const PiecewisePoly& radial);

/// The evolution driver: step size, Euler push, reprojection about the moving
/// centroid, periodic remeshing, stopping criteria.
EvolutionRecord evolve(const CurveState& initial, const RunConfig& config);

}  // namespace curveflow
