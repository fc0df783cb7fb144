#include "curveflow/poly.hpp"

#include <algorithm>
#include <cmath>

namespace curveflow {

Poly::Poly(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.assign(1, 0.0);
}

double Poly::eval(double x) const {
  double v = 0.0;
  for (size_t k = c_.size(); k-- > 0;) v = v * x + c_[k];
  return v;
}

void Poly::eval_jet(double x, int order, double* out) const {
  // Repeated synthetic division; out[j] = p^(j)(x) after scaling by j!.
  for (int j = 0; j <= order; ++j) out[j] = 0.0;
  for (size_t k = c_.size(); k-- > 0;) {
    for (int j = order; j >= 1; --j) out[j] = out[j] * x + out[j - 1];
    out[0] = out[0] * x + c_[k];
  }
  double fact = 1.0;
  for (int j = 2; j <= order; ++j) {
    fact *= j;
    out[j] *= fact;
  }
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly::constant(0.0);
  std::vector<double> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
  return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
  std::vector<double> a(c_.size() + 1, 0.0);
  for (size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<double>(k + 1);
  return Poly(std::move(a));
}

double Poly::integral(double a, double b) const {
  Poly F = antiderivative();
  return F.eval(b) - F.eval(a);
}

Poly Poly::shifted(double delta) const {
  std::vector<double> s = c_;
  const size_t n = s.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t k = n - 1; k > i; --k) s[k - 1] += delta * s[k];
  return Poly(std::move(s));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
  for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
  for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) r[k] -= o.c_[k];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(double s) const {
  std::vector<double> r = c_;
  for (double& v : r) v *= s;
  return Poly(std::move(r));
}

double Poly::sup_on(double a, double b, int samples) const {
  double m = std::max(std::fabs(eval(a)), std::fabs(eval(b)));
  for (int i = 1; i < samples; ++i) {
    double x = a + (b - a) * i / samples;
    m = std::max(m, std::fabs(eval(x)));
  }
  return m;
}

bool Poly::certainly_nonzero_on(double a, double b) const {
  const double mid = 0.5 * (a + b);
  const double rad = 0.5 * (b - a);
  Poly s = shifted(mid);
  double bound = 0.0, rk = 1.0;
  for (size_t k = 1; k < s.c_.size(); ++k) {
    rk *= rad;
    bound += std::fabs(s.c_[k]) * rk;
  }
  return std::fabs(s.c_[0]) > bound;
}

namespace {

// Safeguarded Newton within a sign-change bracket [lo, hi].
double refine_root(const Poly& p, const Poly& dp, double lo, double hi,
                   double flo) {
  double x = 0.5 * (lo + hi);
  const double xtol = 1e-14 * std::max(1.0, std::max(std::fabs(lo), std::fabs(hi)));
  for (int it = 0; it < 120 && hi - lo > xtol; ++it) {
    double f = p.eval(x);
    if (f == 0.0) return x;
    if ((f > 0) == (flo > 0))
      lo = x;
    else
      hi = x;
    double d = dp.eval(x);
    double xn = (d != 0.0) ? x - f / d : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    x = xn;
  }
  return x;
}

}  // namespace

std::vector<double> Poly::roots_on(double a, double b, double value_tol,
                                   double min_sep) const {
  std::vector<double> roots;
  if (b <= a) return roots;

  // Effective degree: ignore trailing coefficients that cannot influence the
  // value on [a, b] at the working tolerance.
  const double span = std::max({1.0, std::fabs(a), std::fabs(b)});
  double coeff_scale = 0.0, xk = 1.0;
  for (const double v : c_) {
    coeff_scale = std::max(coeff_scale, std::fabs(v) * xk);
    xk *= span;
  }
  int deg = degree();
  {
    double xd = std::pow(span, deg);
    while (deg > 0 && std::fabs(c_[static_cast<size_t>(deg)]) * xd <
                          1e-300 + 1e-16 * coeff_scale) {
      --deg;
      xd /= span;
    }
  }

  if (deg == 0) return roots;

  if (deg == 1) {
    double r = -c_[0] / c_[1];
    if (r >= a && r <= b) roots.push_back(r);
    return roots;
  }

  if (certainly_nonzero_on(a, b)) return roots;

  if (deg == 2) {
    // Numerically stable quadratic formula.
    const double A = c_[2], B = c_[1], C = c_[0];
    double disc = B * B - 4 * A * C;
    if (disc >= 0.0) {
      double sq = std::sqrt(disc);
      double q = -0.5 * (B + (B >= 0 ? sq : -sq));
      double r1 = q / A;
      double r2 = (q != 0.0) ? C / q : r1;
      if (r1 > r2) std::swap(r1, r2);
      if (r1 >= a && r1 <= b) roots.push_back(r1);
      if (r2 >= a && r2 <= b && r2 - r1 > min_sep) roots.push_back(r2);
    } else if (disc > -value_tol * value_tol) {
      double r = -B / (2 * A);
      if (r >= a && r <= b && std::fabs(eval(r)) <= value_tol)
        roots.push_back(r);
    }
    return roots;
  }

  // Split [a, b] at the stationary points; the polynomial is monotone on
  // each piece, so a sign check per piece finds every root.
  Poly trimmed(std::vector<double>(c_.begin(), c_.begin() + deg + 1));
  Poly dp = trimmed.derivative();
  std::vector<double> cuts = dp.roots_on(a, b, value_tol, min_sep);
  std::vector<double> pts;
  pts.reserve(cuts.size() + 2);
  pts.push_back(a);
  for (double caux : cuts)
    if (caux > a + 1e-15 && caux < b - 1e-15) pts.push_back(caux);
  pts.push_back(b);

  auto push = [&](double r) {
    if (!roots.empty() && r - roots.back() <= min_sep) return;
    roots.push_back(r);
  };

  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const double u = pts[i], v = pts[i + 1];
    const double fu = trimmed.eval(u), fv = trimmed.eval(v);
    if (std::fabs(fu) <= value_tol) {
      push(u);
      continue;
    }
    if (std::fabs(fv) <= value_tol) continue;  // handled as next piece's left end
    if ((fu > 0) != (fv > 0)) push(refine_root(trimmed, dp, u, v, fu));
  }
  if (std::fabs(trimmed.eval(b)) <= value_tol) push(b);
  return roots;
}

}  // namespace curveflow
