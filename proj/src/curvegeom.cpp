#include "curveflow/curvegeom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "curveflow/errors.hpp"
#include "curveflow/quadrature.hpp"

namespace curveflow {

namespace {

constexpr double kTangentFloor = 1e-12;

// Integrate f over segment j of the mesh with the doubling self-check.
double segment_integral(const PhaseMesh& mesh, int j,
                        const std::function<double(double)>& f) {
  const double a = mesh.node(j), b = mesh.segment_end(j);
  const double g10 = gauss_integrate(f, a, b, 10);
  const double g20 = gauss_integrate(f, a, b, 20);
  if (std::fabs(g20 - g10) <= 1e-10 * std::max(1e-300, std::fabs(g20))) return g20;
  return gauss_integrate_checked(f, a, b, 20, 1e-12, 160);
}

// Strict positivity of the radial spline: node and 8 interior samples per
// segment, plus the exact per-segment minimum via stationary points.
void check_positive(const PiecewisePoly& r) {
  const PhaseMesh& mesh = r.mesh();
  for (int j = 0; j < mesh.size(); ++j) {
    const Poly& p = r.segment(j);
    const double h = mesh.segment_length(j);
    for (int i = 0; i <= 8; ++i)
      if (!(p.eval(h * i / 8.0) > 0.0))
        throw std::invalid_argument("CurveState: radial function not strictly positive");
    Poly dp = p.derivative();
    double scale = p.sup_on(0.0, h, 8);
    for (double x : dp.roots_on(0.0, h, 1e-12 * std::max(scale, 1e-300)))
      if (!(p.eval(x) > 0.0))
        throw std::invalid_argument("CurveState: radial function not strictly positive");
  }
}

struct Jet2 {
  double r, dr, d2r;
};

Jet2 jet2(const PiecewisePoly& radial, double phi) {
  double out[3];
  radial.eval_jet(phi, 2, out);
  return {out[0], out[1], out[2]};
}

double kappa_from(const Jet2& j) {
  return (j.r * (j.r - j.d2r) + 2.0 * j.dr * j.dr) /
         std::pow(j.r * j.r + j.dr * j.dr, 1.5);
}

}  // namespace

FlowParams::FlowParams(double c_, double alpha_, bool signed_power_)
    : c(c_), alpha(alpha_), signed_power(signed_power_) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("FlowParams: alpha must be >= 0");
  if (!(c >= 0.0)) throw std::invalid_argument("FlowParams: c must be >= 0");
}

double area_of(const PiecewisePoly& radial) {
  return 0.5 * (radial * radial).integral();
}

Vec2 centroid_of(const PiecewisePoly& radial, Vec2 ref) {
  const PhaseMesh& mesh = radial.mesh();
  Vec2 m{0.0, 0.0};
  for (int j = 0; j < mesh.size(); ++j) {
    const Poly& p = radial.segment(j);
    const double a = mesh.node(j);
    m.x += segment_integral(mesh, j, [&](double phi) {
      const double r = p.eval(phi - a);
      return r * r * r * std::cos(phi);
    });
    m.y += segment_integral(mesh, j, [&](double phi) {
      const double r = p.eval(phi - a);
      return r * r * r * std::sin(phi);
    });
  }
  return ref + m / (3.0 * area_of(radial));
}

CurveState::CurveState(PiecewisePoly radial, Vec2 refpoint, double time)
    : radial_(std::move(radial)), ref_(refpoint), time_(time) {
  check_positive(radial_);
  const PhaseMesh& mesh = radial_.mesh();
  const int n = mesh.size();

  area_ = area_of(radial_);

  arc_prefix_.assign(static_cast<size_t>(n) + 1, 0.0);
  for (int j = 0; j < n; ++j) {
    const Poly& p = radial_.segment(j);
    const Poly dp = p.derivative();
    const double a = mesh.node(j);
    auto speed = [&](double phi) {
      const double x = phi - a;
      const double r = p.eval(x), dr = dp.eval(x);
      return std::sqrt(r * r + dr * dr);
    };
    arc_prefix_[static_cast<size_t>(j) + 1] =
        arc_prefix_[static_cast<size_t>(j)] + segment_integral(mesh, j, speed);
  }
  arclength_ = arc_prefix_.back();

  centroid_ = centroid_of(radial_, ref_);

  max_abs_kappa_ = max_abs_curvature(radial_);
  quotient_ = 4.0 * kPi * area_ / (arclength_ * arclength_);

  if (!(area_ > 0.0) || !(arclength_ > 0.0) ||
      !(quotient_ > 0.0 && quotient_ <= 1.0 + 1e-9))
    throw DegenerateCurveError("CurveState: invalid area/arclength/quotient");
}

double CurveState::arclength_to(double phi) const {
  if (phi >= kPi) return arclength_;  // s(pi) is the total length
  const PhaseMesh& mesh = radial_.mesh();
  auto partial = [&](double lifted) {
    // arclength from node 0 to the lifted phase
    const int j = mesh.locate(lifted);
    const Poly& p = radial_.segment(j);
    const Poly dp = p.derivative();
    const double a = mesh.node(j);
    double s = arc_prefix_[static_cast<size_t>(j)];
    if (lifted > a)
      s += gauss_integrate_checked(
          [&](double t) {
            const double x = t - a;
            const double r = p.eval(x), dr = dp.eval(x);
            return std::sqrt(r * r + dr * dr);
          },
          a, lifted, 10, 1e-12, 80);
    return s;
  };
  const double base = partial(mesh.lift(-kPi));
  double s = partial(mesh.lift(phi)) - base;
  if (s < 0.0) s += arclength_;
  return s;
}

Vec2 gamma(const CurveState& state, double phi) {
  return state.refpoint() + state.radial().eval(phi) * unit_dir(phi);
}

Vec2 normal(const CurveState& state, double phi) {
  double jet[2];
  state.radial().eval_jet(phi, 1, jet);
  const double r = jet[0], dr = jet[1];
  const double speed = std::sqrt(r * r + dr * dr);
  if (speed <= kTangentFloor)
    throw DegenerateCurveError("normal: vanishing tangent");
  // i * gamma' with gamma' = (r' + i r) e^{i phi}
  const Vec2 e = unit_dir(phi);
  const Vec2 g1{dr * e.x - r * e.y, dr * e.y + r * e.x};
  return Vec2{-g1.y, g1.x} / speed;
}

double curvature(const CurveState& state, double phi) {
  const Jet2 j = jet2(state.radial(), phi);
  if (std::sqrt(j.r * j.r + j.dr * j.dr) <= kTangentFloor)
    throw DegenerateCurveError("curvature: vanishing tangent");
  return kappa_from(j);
}

double area(const CurveState& state) { return state.area(); }
Vec2 centroid(const CurveState& state) { return state.centroid(); }
double arclength(const CurveState& state, double phi) { return state.arclength_to(phi); }
double total_arclength(const CurveState& state) { return state.total_arclength(); }
double isoperimetric_quotient(const CurveState& state) {
  return state.isoperimetric_quotient();
}

bool is_convex(const CurveState& state) {
  const PiecewisePoly& r = state.radial();
  const PiecewisePoly dr = r.derivative();
  const PiecewisePoly d2r = dr.derivative();
  const PiecewisePoly cond = r * r + dr * dr * 2.0 - r * d2r;
  try {
    if (!cond.real_roots().empty()) return false;
  } catch (const DegenerateSegmentError&) {
    // uniformly flat condition expression: sign decided by a sample
  }
  return cond.eval(0.0) > 0.0;
}

bool is_reference_point(const CurveState& state, Vec2 p) {
  const Vec2 d = p - state.refpoint();
  const double dist = d.norm();
  if (dist > 0.0) {
    const double psi = std::atan2(d.y, d.x);
    if (dist >= state.radial().eval(psi)) return false;  // not strictly inside
  }
  const PhaseMesh& mesh = state.mesh();
  const PiecewisePoly& rad = state.radial();
  for (int j = 0; j < mesh.size(); ++j) {
    const double a = mesh.node(j);
    const double h = mesh.segment_length(j);
    for (int i = 0; i < 16; ++i) {
      const double phi = a + h * i / 16.0;
      double jet[2];
      rad.eval_jet(phi, 1, jet);
      const Vec2 e = unit_dir(phi);
      const Vec2 g = state.refpoint() + jet[0] * e - p;
      const Vec2 g1{jet[1] * e.x - jet[0] * e.y, jet[1] * e.y + jet[0] * e.x};
      if (!(g.cross(g1) > 0.0)) return false;  // tangency or reversal
    }
  }
  return true;
}

SymmetryOp SymmetryOp::rotation(int fold) {
  if (fold < 1) throw std::invalid_argument("SymmetryOp: fold must be >= 1");
  return {Kind::Rotation, fold, 0.0};
}

SymmetryOp SymmetryOp::reflection(double axis_angle) {
  return {Kind::Reflection, 1, axis_angle};
}

double symmetry_residual(const CurveState& state, const SymmetryOp& op) {
  const PiecewisePoly& r = state.radial();
  const int samples = 1000;
  double sup = 0.0;
  if (op.kind == SymmetryOp::Kind::Rotation) {
    const double shift = kTwoPi / op.fold;
    for (int i = 0; i < samples; ++i) {
      const double phi = -kPi + kTwoPi * i / samples;
      sup = std::max(sup, std::fabs(r.eval(phi) - r.eval(phi + shift)));
    }
  } else {
    for (int i = 0; i < samples; ++i) {
      const double phi = -kPi + kTwoPi * i / samples;
      sup = std::max(sup, std::fabs(r.eval(op.axis + phi) - r.eval(op.axis - phi)));
    }
  }
  return sup;
}

PolarPoints polar_about(const std::vector<Vec2>& points, Vec2 ref) {
  const int n = static_cast<int>(points.size());
  std::vector<double> phases(static_cast<size_t>(n));
  std::vector<double> radii(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Vec2 d = points[static_cast<size_t>(j)] - ref;
    const double rho = d.norm();
    if (!(rho > 0.0))
      throw StarLikenessLostError("polar_about: point coincides with reference");
    phases[static_cast<size_t>(j)] = wrap_phase(std::atan2(d.y, d.x));
    radii[static_cast<size_t>(j)] = rho;
  }
  // Exactly one cyclic wrap is allowed; more means the angle is not monotone.
  int start = 0, drops = 0;
  for (int j = 0; j < n; ++j) {
    const int prev = (j + n - 1) % n;
    if (phases[static_cast<size_t>(j)] <= phases[static_cast<size_t>(prev)]) {
      ++drops;
      start = j;
    }
  }
  if (drops != 1)
    throw StarLikenessLostError("polar_about: points not angularly monotone about reference");
  std::vector<double> mesh_nodes(static_cast<size_t>(n));
  std::vector<double> values(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int src = (start + j) % n;
    mesh_nodes[static_cast<size_t>(j)] = phases[static_cast<size_t>(src)];
    values[static_cast<size_t>(j)] = radii[static_cast<size_t>(src)];
  }
  return {PhaseMesh(std::move(mesh_nodes)), std::move(values)};
}

CurvatureParts curvature_parts(const PiecewisePoly& radial) {
  const PiecewisePoly dr = radial.derivative();
  const PiecewisePoly d2r = dr.derivative();
  PiecewisePoly p = radial * (radial - d2r) + dr * dr * 2.0;
  PiecewisePoly q = radial * radial + dr * dr;
  PiecewisePoly dnum = p.derivative() * q * 2.0 - p * q.derivative() * 3.0;
  return {std::move(p), std::move(q), std::move(dnum)};
}

double max_abs_curvature(const PiecewisePoly& radial) {
  const CurvatureParts parts = curvature_parts(radial);
  const PhaseMesh& mesh = radial.mesh();
  const int n = mesh.size();

  double global_sup = 0.0;
  std::vector<double> seg_sup(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    seg_sup[static_cast<size_t>(j)] =
        parts.dnum.segment(j).sup_on(0.0, mesh.segment_length(j), 8);
    global_sup = std::max(global_sup, seg_sup[static_cast<size_t>(j)]);
  }

  double best = 0.0;
  auto consider = [&](int j, double x) {
    const double p = parts.p.segment(j).eval(x);
    const double q = parts.q.segment(j).eval(x);
    if (q <= 0.0) throw DegenerateCurveError("max_abs_curvature: vanishing tangent");
    best = std::max(best, std::fabs(p) / std::pow(q, 1.5));
  };
  const double value_tol = 1e-12 * std::max(global_sup, 1e-300);
  for (int j = 0; j < n; ++j) {
    const double h = mesh.segment_length(j);
    consider(j, 0.0);
    consider(j, h);
    if (seg_sup[static_cast<size_t>(j)] < 1e-13 * global_sup) continue;  // flat: knots suffice
    for (double x : parts.dnum.segment(j).roots_on(0.0, h, value_tol)) consider(j, x);
  }
  return best;
}

CurveState re_reference(const CurveState& state, Vec2 new_ref) {
  const PhaseMesh& mesh = state.mesh();
  std::vector<Vec2> pts;
  pts.reserve(static_cast<size_t>(mesh.size()));
  for (double phi : mesh.nodes()) pts.push_back(gamma(state, phi));
  PolarPoints pp = polar_about(pts, new_ref);
  return CurveState(fit_periodic_spline(pp.mesh, pp.values), new_ref, state.time());
}

}  // namespace curveflow
