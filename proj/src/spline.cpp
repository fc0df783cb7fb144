#include "curveflow/spline.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <cassert>
#include <cmath>

#include "curveflow/errors.hpp"
#include "curveflow/quadrature.hpp"

namespace curveflow {

namespace {

constexpr int kP = kSplineDegree;

// Extended periodic knot vector: knots[p + j] = lifted node j for
// j = 0..N, padded with p wrapped knots on each side.
std::vector<double> extended_knots(const PhaseMesh& mesh) {
  const int n = mesh.size();
  std::vector<double> t(static_cast<size_t>(n) + 2 * kP + 1);
  for (int j = 0; j <= n; ++j)
    t[static_cast<size_t>(kP + j)] = (j < n) ? mesh.node(j) : mesh.node(0) + kTwoPi;
  for (int k = 1; k <= kP; ++k) {
    t[static_cast<size_t>(kP - k)] = mesh.node(n - k) - kTwoPi;
    t[static_cast<size_t>(kP + n + k)] = mesh.node(k) + kTwoPi;
  }
  return t;
}

// Nonzero B-spline basis values at x in span s (Cox-de Boor).
void basis_funs(int s, double x, const std::vector<double>& U, double* vals) {
  double left[kP + 1], right[kP + 1];
  vals[0] = 1.0;
  for (int j = 1; j <= kP; ++j) {
    left[j] = x - U[static_cast<size_t>(s + 1 - j)];
    right[j] = U[static_cast<size_t>(s + j)] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      double temp = vals[r] / (right[r + 1] + left[j - r]);
      vals[r] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    vals[j] = saved;
  }
}

// Derivatives up to order n of the kP+1 nonzero basis functions at x in
// span s; ders[m][r] = m-th derivative of B_{s-kP+r}.
void ders_basis_funs(int s, double x, int n, const std::vector<double>& U,
                     double ders[][kP + 1]) {
  double ndu[kP + 1][kP + 1];
  double left[kP + 1], right[kP + 1];
  ndu[0][0] = 1.0;
  for (int j = 1; j <= kP; ++j) {
    left[j] = x - U[static_cast<size_t>(s + 1 - j)];
    right[j] = U[static_cast<size_t>(s + j)] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      ndu[j][r] = right[r + 1] + left[j - r];
      double temp = ndu[r][j - 1] / ndu[j][r];
      ndu[r][j] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    ndu[j][j] = saved;
  }
  for (int j = 0; j <= kP; ++j) ders[0][j] = ndu[j][kP];

  double a[2][kP + 1];
  for (int r = 0; r <= kP; ++r) {
    int s1 = 0, s2 = 1;
    a[0][0] = 1.0;
    for (int k = 1; k <= n; ++k) {
      double d = 0.0;
      const int rk = r - k, pk = kP - k;
      if (r >= k) {
        a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
        d = a[s2][0] * ndu[rk][pk];
      }
      const int j1 = (rk >= -1) ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : kP - r;
      for (int j = j1; j <= j2; ++j) {
        a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][rk + j];
        d += a[s2][j] * ndu[rk + j][pk];
      }
      if (r <= pk) {
        a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
        d += a[s2][k] * ndu[r][pk];
      }
      ders[k][r] = d;
      std::swap(s1, s2);
    }
  }
  double fac = kP;
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j <= kP; ++j) ders[k][j] *= fac;
    fac *= (kP - k);
  }
}

}  // namespace

PhaseMesh::PhaseMesh(std::vector<double> nodes, int max_nodes)
    : nodes_(std::move(nodes)) {
  const int n = size();
  if (n < 8) throw std::invalid_argument("PhaseMesh: need at least 8 nodes");
  if (n > max_nodes) throw std::invalid_argument("PhaseMesh: node count above bound");
  for (int j = 0; j < n; ++j) {
    if (nodes_[static_cast<size_t>(j)] < -kPi || nodes_[static_cast<size_t>(j)] >= kPi)
      throw std::invalid_argument("PhaseMesh: node outside [-pi, pi)");
    if (j > 0 && nodes_[static_cast<size_t>(j)] <= nodes_[static_cast<size_t>(j) - 1])
      throw std::invalid_argument("PhaseMesh: nodes not strictly increasing");
  }
  if (nodes_[0] + kTwoPi <= nodes_[static_cast<size_t>(n) - 1])
    throw std::invalid_argument("PhaseMesh: empty wraparound gap");
}

double PhaseMesh::lift(double phi) const {
  double w = wrap_phase(phi);
  if (w < nodes_[0]) w += kTwoPi;
  return w;
}

int PhaseMesh::locate(double phi) const {
  const double x = lift(phi);
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  int j = static_cast<int>(it - nodes_.begin()) - 1;
  if (j < 0) j = 0;
  if (j >= size()) j = size() - 1;
  return j;
}

PiecewisePoly::PiecewisePoly(PhaseMesh mesh, std::vector<Poly> segments)
    : mesh_(std::move(mesh)), segs_(std::move(segments)) {
  assert(static_cast<int>(segs_.size()) == mesh_.size());
}

int PiecewisePoly::degree() const {
  int d = 0;
  for (const Poly& p : segs_) d = std::max(d, p.degree());
  return d;
}

double PiecewisePoly::eval(double phi) const {
  const int j = mesh_.locate(phi);
  return segs_[static_cast<size_t>(j)].eval(mesh_.lift(phi) - mesh_.node(j));
}

void PiecewisePoly::eval_jet(double phi, int order, double* out) const {
  const int j = mesh_.locate(phi);
  segs_[static_cast<size_t>(j)].eval_jet(mesh_.lift(phi) - mesh_.node(j), order, out);
}

PiecewisePoly PiecewisePoly::derivative(int k) const {
  std::vector<Poly> d;
  d.reserve(segs_.size());
  for (const Poly& p : segs_) {
    Poly q = p;
    for (int i = 0; i < k; ++i) q = q.derivative();
    d.push_back(std::move(q));
  }
  return PiecewisePoly(mesh_, std::move(d));
}

PiecewisePoly PiecewisePoly::operator*(const PiecewisePoly& o) const {
  assert(mesh_ == o.mesh_);
  std::vector<Poly> r;
  r.reserve(segs_.size());
  for (size_t j = 0; j < segs_.size(); ++j) r.push_back(segs_[j] * o.segs_[j]);
  return PiecewisePoly(mesh_, std::move(r));
}

PiecewisePoly PiecewisePoly::operator+(const PiecewisePoly& o) const {
  assert(mesh_ == o.mesh_);
  std::vector<Poly> r;
  r.reserve(segs_.size());
  for (size_t j = 0; j < segs_.size(); ++j) r.push_back(segs_[j] + o.segs_[j]);
  return PiecewisePoly(mesh_, std::move(r));
}

PiecewisePoly PiecewisePoly::operator-(const PiecewisePoly& o) const {
  assert(mesh_ == o.mesh_);
  std::vector<Poly> r;
  r.reserve(segs_.size());
  for (size_t j = 0; j < segs_.size(); ++j) r.push_back(segs_[j] - o.segs_[j]);
  return PiecewisePoly(mesh_, std::move(r));
}

PiecewisePoly PiecewisePoly::operator*(double s) const {
  std::vector<Poly> r;
  r.reserve(segs_.size());
  for (const Poly& p : segs_) r.push_back(p * s);
  return PiecewisePoly(mesh_, std::move(r));
}

double PiecewisePoly::integral() const {
  double sum = 0.0;
  for (int j = 0; j < mesh_.size(); ++j)
    sum += segs_[static_cast<size_t>(j)].integral(0.0, mesh_.segment_length(j));
  return sum;
}

double PiecewisePoly::sup_norm() const {
  double m = 0.0;
  for (int j = 0; j < mesh_.size(); ++j)
    m = std::max(m, segs_[static_cast<size_t>(j)].sup_on(0.0, mesh_.segment_length(j)));
  return m;
}

std::vector<double> PiecewisePoly::real_roots() const {
  const int n = mesh_.size();
  std::vector<double> seg_sup(static_cast<size_t>(n));
  double global_sup = 0.0;
  for (int j = 0; j < n; ++j) {
    seg_sup[static_cast<size_t>(j)] =
        segs_[static_cast<size_t>(j)].sup_on(0.0, mesh_.segment_length(j));
    global_sup = std::max(global_sup, seg_sup[static_cast<size_t>(j)]);
  }
  if (global_sup <= 1e-300)
    throw DegenerateSegmentError("real_roots: function is identically zero");
  for (int j = 0; j < n; ++j)
    if (seg_sup[static_cast<size_t>(j)] < 1e-13 * global_sup)
      throw DegenerateSegmentError("real_roots: flat segment, root counting ill-posed");

  const double value_tol = 1e-12 * global_sup;
  std::vector<double> roots;
  for (int j = 0; j < n; ++j) {
    const double h = mesh_.segment_length(j);
    for (double x : segs_[static_cast<size_t>(j)].roots_on(0.0, h, value_tol))
      roots.push_back(wrap_phase(mesh_.node(j) + x));
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots)
    if (out.empty() || r - out.back() > 1e-9) out.push_back(r);
  if (out.size() >= 2 && (out.front() + kTwoPi) - out.back() <= 1e-9) out.pop_back();
  return out;
}

PiecewisePoly fit_periodic_spline(const PhaseMesh& mesh,
                                  const std::vector<double>& values,
                                  bool positive) {
  const int n = mesh.size();
  if (static_cast<int>(values.size()) != n)
    throw std::invalid_argument("fit_periodic_spline: values/mesh size mismatch");
  if (n < kP + 3)
    throw InsufficientDataError("fit_periodic_spline: need at least p + 3 nodes");
  if (positive)
    for (double v : values)
      if (!(v > 0.0))
        throw std::invalid_argument("fit_periodic_spline: radial values must be positive");

  // Constant data reproduces exactly (B-splines form a partition of unity).
  if (std::all_of(values.begin(), values.end(),
                  [&](double v) { return v == values[0]; })) {
    std::vector<Poly> segs(static_cast<size_t>(n), Poly::constant(values[0]));
    return PiecewisePoly(mesh, std::move(segs));
  }

  const std::vector<double> knots = extended_knots(mesh);

  Eigen::VectorXd coeffs;
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::fabs(v));

  if (n <= 512) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd b(n);
    double vals[kP + 1];
    for (int k = 0; k < n; ++k) {
      basis_funs(kP + k, mesh.node(k), knots, vals);
      for (int m = 0; m <= kP; ++m) A(k, (k + m) % n) += vals[m];
      b(k) = values[static_cast<size_t>(k)];
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    coeffs = lu.solve(b);
    const double resid = (A * coeffs - b).cwiseAbs().maxCoeff();
    if (!coeffs.allFinite() || resid > 1e-8 * std::max(scale, 1e-300))
      throw RepresentationError("fit_periodic_spline: singular interpolation system");
  } else {
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(n) * (kP + 1));
    Eigen::VectorXd b(n);
    double vals[kP + 1];
    for (int k = 0; k < n; ++k) {
      basis_funs(kP + k, mesh.node(k), knots, vals);
      for (int m = 0; m <= kP; ++m) trip.emplace_back(k, (k + m) % n, vals[m]);
      b(k) = values[static_cast<size_t>(k)];
    }
    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success)
      throw RepresentationError("fit_periodic_spline: singular interpolation system");
    coeffs = lu.solve(b);
    if (!coeffs.allFinite())
      throw RepresentationError("fit_periodic_spline: singular interpolation system");
  }

  // Local polynomial of each segment from the exact jet at its left knot.
  std::vector<Poly> segs;
  segs.reserve(static_cast<size_t>(n));
  double ders[kP + 1][kP + 1];
  for (int j = 0; j < n; ++j) {
    ders_basis_funs(kP + j, mesh.node(j), kP, knots, ders);
    std::vector<double> local(kP + 1);
    double fact = 1.0;
    for (int m = 0; m <= kP; ++m) {
      if (m >= 2) fact *= m;
      double d = 0.0;
      for (int r = 0; r <= kP; ++r) d += ders[m][r] * coeffs((j + r) % n);
      local[static_cast<size_t>(m)] = d / fact;
    }
    segs.emplace_back(std::move(local));
  }
  return PiecewisePoly(mesh, std::move(segs));
}

double l2_distance(const std::function<double(double)>& f,
                   const std::function<double(double)>& g,
                   const PhaseMesh& mesh, L2Mode mode) {
  if (mode == L2Mode::Discrete) {
    double sum = 0.0;
    for (double phi : mesh.nodes()) {
      const double d = f(phi) - g(phi);
      sum += d * d;
    }
    return std::sqrt(sum) / mesh.size();
  }
  auto sq = [&](double phi) {
    const double d = f(phi) - g(phi);
    return d * d;
  };
  double sum = 0.0;
  for (int j = 0; j < mesh.size(); ++j) {
    const double a = mesh.node(j), b = mesh.segment_end(j);
    double est = gauss_integrate(sq, a, b, 10);
#ifndef NDEBUG
    double check = gauss_integrate(sq, a, b, 20);
    assert(std::fabs(check - est) <= 0.5 * (std::fabs(check) + std::fabs(est)) + 1e-13);
    est = check;
#endif
    sum += est;
  }
  return std::sqrt(std::max(0.0, sum));
}

}  // namespace curveflow
