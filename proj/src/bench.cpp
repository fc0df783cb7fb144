#include "curveflow/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "curveflow/errors.hpp"
#include "curveflow/quadrature.hpp"

namespace curveflow {

namespace {

struct SineTerm {
  double amp, freq, phase;
};

CatalogCurve sine_curve(std::string name, double base, std::vector<SineTerm> terms,
                        double rotation) {
  for (SineTerm& t : terms) t.phase -= t.freq * rotation;  // r(phi - rotation)
  CatalogCurve c;
  c.name = std::move(name);
  c.r = [base, terms](double phi) {
    double v = base;
    for (const SineTerm& t : terms) v += t.amp * std::sin(t.freq * phi + t.phase);
    return v;
  };
  c.dr = [terms](double phi) {
    double v = 0.0;
    for (const SineTerm& t : terms)
      v += t.amp * t.freq * std::cos(t.freq * phi + t.phase);
    return v;
  };
  c.d2r = [terms](double phi) {
    double v = 0.0;
    for (const SineTerm& t : terms)
      v -= t.amp * t.freq * t.freq * std::sin(t.freq * phi + t.phase);
    return v;
  };
  c.d3r = [terms](double phi) {
    double v = 0.0;
    for (const SineTerm& t : terms)
      v -= t.amp * t.freq * t.freq * t.freq * std::cos(t.freq * phi + t.phase);
    return v;
  };
  return c;
}

CatalogCurve ellipse_curve(double a, double b, double rotation) {
  if (!(a > 0.0 && b > 0.0))
    throw std::invalid_argument("catalog: ellipse semi-axes must be positive");
  CatalogCurve c;
  c.name = "ellipse";
  const double d = a * a - b * b;
  auto u = [a, b, rotation](double phi) {
    const double p = phi - rotation;
    const double bc = b * std::cos(p), as = a * std::sin(p);
    return bc * bc + as * as;
  };
  auto du = [d, rotation](double phi) { return d * std::sin(2 * (phi - rotation)); };
  auto d2u = [d, rotation](double phi) { return 2 * d * std::cos(2 * (phi - rotation)); };
  auto d3u = [d, rotation](double phi) { return -4 * d * std::sin(2 * (phi - rotation)); };
  const double ab = a * b;
  c.r = [ab, u](double phi) { return ab / std::sqrt(u(phi)); };
  c.dr = [ab, u, du](double phi) {
    return -0.5 * ab * du(phi) * std::pow(u(phi), -1.5);
  };
  c.d2r = [ab, u, du, d2u](double phi) {
    const double uu = u(phi), u1 = du(phi);
    return ab * (0.75 * u1 * u1 * std::pow(uu, -2.5) -
                 0.5 * d2u(phi) * std::pow(uu, -1.5));
  };
  c.d3r = [ab, u, du, d2u, d3u](double phi) {
    const double uu = u(phi), u1 = du(phi), u2 = d2u(phi);
    return ab * (-(15.0 / 8.0) * u1 * u1 * u1 * std::pow(uu, -3.5) +
                 (9.0 / 4.0) * u1 * u2 * std::pow(uu, -2.5) -
                 0.5 * d3u(phi) * std::pow(uu, -1.5));
  };
  return c;
}

double catalog_delta(int n) {
  switch (n) {
    case 3: return 0.05;
    case 4: return 0.03;
    case 5: return 0.02;
    default: return 0.01;
  }
}

// Composite checked quadrature of f over [-pi, pi].
double full_circle_integral(const std::function<double(double)>& f, int panels = 64) {
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = -kPi + kTwoPi * i / panels;
    const double b = -kPi + kTwoPi * (i + 1) / panels;
    sum += gauss_integrate_checked(f, a, b, 10, 1e-13, 80);
  }
  return sum;
}

// Arclength parameter of a formula curve measured from phi_start.
class FormulaArclength {
 public:
  FormulaArclength(const CatalogCurve& f, double phi_start)
      : f_(f), start_(phi_start) {
    total_ = integral(start_, start_ + kTwoPi);
  }
  double total() const { return total_; }

  double solve(double target) const {
    double lo = start_, hi = start_ + kTwoPi;
    double x = start_ + kTwoPi * target / total_;
    for (int it = 0; it < 100; ++it) {
      const double s = integral(start_, x);
      if (std::fabs(s - target) <= 1e-12 * total_) break;
      if (s < target)
        lo = x;
      else
        hi = x;
      double xn = x - (s - target) / speed(x);
      if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
      x = xn;
    }
    return x;
  }

 private:
  double speed(double phi) const {
    const double r = f_.r(phi), dr = f_.dr(phi);
    return std::sqrt(r * r + dr * dr);
  }
  double integral(double a, double b) const {
    if (b <= a) return 0.0;
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / 0.2)));
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) {
      const double x0 = a + (b - a) * i / panels;
      const double x1 = a + (b - a) * (i + 1) / panels;
      sum += gauss_integrate_checked([&](double t) { return speed(t); }, x0, x1,
                                     10, 1e-13, 40);
    }
    return sum;
  }

  const CatalogCurve& f_;
  double start_;
  double total_ = 0.0;
};

}  // namespace

double CatalogCurve::kappa(double phi) const {
  const double rv = r(phi), d1 = dr(phi), d2 = d2r(phi);
  return (rv * (rv - d2) + 2 * d1 * d1) / std::pow(rv * rv + d1 * d1, 1.5);
}

CatalogCurve catalog_formula(const std::string& name, const CatalogParams& p) {
  std::string key;
  for (char ch : name) key.push_back(static_cast<char>(std::tolower(ch)));

  CatalogParams q = p;
  if (key.size() == 2 && (key[0] == 'd' || key[0] == 'c') &&
      std::isdigit(static_cast<unsigned char>(key[1]))) {
    q.n_sym = key[1] - '0';
    q.delta = catalog_delta(q.n_sym);
    key = (key[0] == 'd') ? "dn" : "cn";
  }

  CatalogCurve curve;
  if (key == "circle") {
    if (!(q.radius > 0.0)) throw std::invalid_argument("catalog: circle radius <= 0");
    curve = sine_curve("circle", q.radius, {}, 0.0);
  } else if (key == "standard") {
    curve = sine_curve("standard", 0.5, {{0.04, 2, 0.0}, {0.03, 3, 0.0}}, q.rotation);
  } else if (key == "sine25") {
    curve = sine_curve("sine25", 0.5, {{0.04, 2, 0.0}, {0.03, 5, 0.0}}, q.rotation);
  } else if (key == "sine57") {
    curve = sine_curve("sine57", 0.5, {{0.03, 5, 5 * kPi / 7}, {0.04, 7, 0.0}},
                       q.rotation);
  } else if (key == "ellipse") {
    curve = ellipse_curve(q.a, q.b, q.rotation);
  } else if (key == "dn") {
    if (q.n_sym < 2) throw std::invalid_argument("catalog: dn needs n >= 2");
    curve = sine_curve("dn", 0.5, {{q.delta, static_cast<double>(q.n_sym), kPi / 2}},
                       q.rotation);
  } else if (key == "cn") {
    if (q.n_sym < 2) throw std::invalid_argument("catalog: cn needs n >= 2");
    curve = sine_curve("cn", 0.5,
                       {{q.delta, static_cast<double>(q.n_sym), kPi / 2},
                        {q.xi, 2.0 * q.n_sym, kPi / 2 + kPi / 5}},
                       q.rotation);
  } else {
    throw std::invalid_argument("catalog: unknown curve name '" + name + "'");
  }

  double mn = 1e300;
  for (int i = 0; i < 4096; ++i)
    mn = std::min(mn, curve.r(-kPi + kTwoPi * i / 4096));
  if (!(mn > 0.0))
    throw std::invalid_argument("catalog: parameters make r non-positive");
  return curve;
}

CentralCurve::CentralCurve(CatalogCurve formula, Vec2 centroid)
    : formula_(std::move(formula)), centroid_(centroid) {}

double CentralCurve::phi_at(double psi) const {
  const Vec2 e = unit_dir(psi);
  // f(phi) = e x (gamma(phi) - C) vanishes where the ray of angle psi hits
  auto f = [&](double phi) {
    const double r = formula_.r(phi);
    const Vec2 g{r * std::cos(phi) - centroid_.x, r * std::sin(phi) - centroid_.y};
    return e.cross(g);
  };
  auto fd = [&](double phi) {
    const double r = formula_.r(phi), dr = formula_.dr(phi);
    const Vec2 e1 = unit_dir(phi);
    const Vec2 g1{dr * e1.x - r * e1.y, dr * e1.y + r * e1.x};
    return e.cross(g1);
  };
  double lo = psi - 1.2, hi = psi + 1.2;
  double flo = f(lo), fhi = f(hi);
  int widen = 0;
  while ((flo > 0) == (fhi > 0) && widen++ < 4) {
    lo -= 0.5;
    hi += 0.5;
    flo = f(lo);
    fhi = f(hi);
  }
  double x = psi;
  for (int it = 0; it < 200; ++it) {
    const double fx = f(x);
    if (std::fabs(fx) < 1e-16) break;
    if ((fx > 0) == (flo > 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    double xn = x - fx / fd(x);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::fabs(xn - x) < 1e-16 * std::max(1.0, std::fabs(x))) {
      x = xn;
      break;
    }
    x = xn;
  }
  return x;
}

double CentralCurve::radial(double psi) const {
  const double phi = phi_at(psi);
  const double r = formula_.r(phi);
  const Vec2 g{r * std::cos(phi) - centroid_.x, r * std::sin(phi) - centroid_.y};
  return g.norm();
}

double CentralCurve::kappa(double psi) const { return formula_.kappa(phi_at(psi)); }

CentralCurve central_form(const std::string& name, const CatalogParams& p) {
  CatalogCurve formula = catalog_formula(name, p);
  const double area = 0.5 * full_circle_integral([&](double t) {
    const double r = formula.r(t);
    return r * r;
  });
  const double mx = full_circle_integral([&](double t) {
    const double r = formula.r(t);
    return r * r * r * std::cos(t);
  });
  const double my = full_circle_integral([&](double t) {
    const double r = formula.r(t);
    return r * r * r * std::sin(t);
  });
  Vec2 c{mx / (3 * area), my / (3 * area)};
  if (c.norm() < 1e-15) c = {0.0, 0.0};
  return CentralCurve(std::move(formula), c);
}

CurveState catalog_curve(const std::string& name, const CatalogParams& p, int n,
                         MeshPolicy::Kind kind) {
  CatalogCurve formula = catalog_formula(name, p);
  std::vector<double> nodes(static_cast<size_t>(n));
  std::vector<double> values(static_cast<size_t>(n));
  if (kind == MeshPolicy::Kind::PhaseUniform) {
    for (int j = 0; j < n; ++j) {
      nodes[static_cast<size_t>(j)] = -kPi + kTwoPi * j / n;
      values[static_cast<size_t>(j)] = formula.r(nodes[static_cast<size_t>(j)]);
    }
  } else {
    FormulaArclength arc(formula, -kPi);
    for (int j = 0; j < n; ++j) {
      const double phi = (j == 0) ? -kPi : arc.solve(arc.total() * j / n);
      nodes[static_cast<size_t>(j)] = phi;
      values[static_cast<size_t>(j)] = formula.r(phi);
    }
  }
  return CurveState(fit_periodic_spline(PhaseMesh(std::move(nodes)), values),
                    {0.0, 0.0}, 0.0);
}

CurveState catalog_curve_centered(const std::string& name, const CatalogParams& p,
                                  int n, MeshPolicy::Kind kind) {
  CentralCurve central = central_form(name, p);
  if (central.centroid().norm() == 0.0) return catalog_curve(name, p, n, kind);

  std::vector<double> nodes(static_cast<size_t>(n));
  std::vector<double> values(static_cast<size_t>(n));
  if (kind == MeshPolicy::Kind::PhaseUniform) {
    for (int j = 0; j < n; ++j) {
      const double psi = -kPi + kTwoPi * j / n;
      nodes[static_cast<size_t>(j)] = psi;
      values[static_cast<size_t>(j)] = central.radial(psi);
    }
  } else {
    const double phi_start = central.phi_at(-kPi);
    FormulaArclength arc(central.formula(), phi_start);
    const Vec2 c = central.centroid();
    for (int j = 0; j < n; ++j) {
      const double phi = (j == 0) ? phi_start : arc.solve(arc.total() * j / n);
      const double r = central.formula().r(phi);
      const Vec2 g{r * std::cos(phi) - c.x, r * std::sin(phi) - c.y};
      const double psi = (j == 0) ? -kPi : std::atan2(g.y, g.x);
      nodes[static_cast<size_t>(j)] = psi;
      values[static_cast<size_t>(j)] = g.norm();
    }
  }
  return CurveState(fit_periodic_spline(PhaseMesh(std::move(nodes)), values),
                    central.centroid(), 0.0);
}

double circle_oracle_tmax(double r0, const FlowParams& params, bool force_general) {
  if (!(r0 > 0.0)) throw std::invalid_argument("circle oracle: r0 <= 0");
  if (params.alpha == 0.0) return r0 / (params.c + 1.0);
  if (!force_general && params.alpha == 1.0 && params.c == 0.0) return 0.5 * r0 * r0;
  const double inv = 1.0 / params.alpha;
  auto integrand = [&](double w) { return std::pow(w, inv) / (1.0 + params.c * w); };
  const double w1 = std::pow(r0, params.alpha);
  return inv * gauss_integrate_checked(integrand, 0.0, w1, 40, 1e-13, 640);
}

double circle_oracle_radius(double r0, const FlowParams& params, double t,
                            bool force_general) {
  const double tmax = circle_oracle_tmax(r0, params, force_general);
  if (t < 0.0 || t >= tmax)
    throw std::invalid_argument("circle oracle: t outside [0, t_max)");
  if (params.alpha == 0.0) return r0 - (params.c + 1.0) * t;
  if (!force_general && params.alpha == 1.0 && params.c == 0.0)
    return std::sqrt(r0 * r0 - 2.0 * t);

  const double inv = 1.0 / params.alpha;
  auto integrand = [&](double w) { return std::pow(w, inv) / (1.0 + params.c * w); };
  const double w1 = std::pow(r0, params.alpha);
  auto elapsed = [&](double radius) {  // t(R), decreasing in R
    const double w0 = std::pow(radius, params.alpha);
    return inv * gauss_integrate_checked(integrand, w0, w1, 40, 1e-13, 640);
  };
  double lo = 0.0, hi = r0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (elapsed(mid) > t)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-13 * r0) break;
  }
  return 0.5 * (lo + hi);
}

double ngon_quotient(int n) {
  if (n < 3) throw std::invalid_argument("ngon_quotient: n must be >= 3");
  const double x = kPi / n;
  return x * std::cos(x) / std::sin(x);
}

bool dn_admissible(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("dn_admissible: n must be >= 2");
  if (!(alpha > 0.0)) throw std::invalid_argument("dn_admissible: alpha must be > 0");
  return alpha < 1.0 / (n * n - 1.0);
}

}  // namespace curveflow
