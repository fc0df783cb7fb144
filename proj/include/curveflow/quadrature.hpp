#pragma once

#include <functional>
#include <vector>

namespace curveflow {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rule of the given order (number of nodes). Rules are computed once by
/// Newton iteration on the Legendre polynomial and cached.
const GaussRule& gauss_legendre(int order);

/// Integrate f over [a, b] with a single Gauss-Legendre panel.
double gauss_integrate(const std::function<double(double)>& f, double a,
                       double b, int order = 10);

/// Integrate with order doubling until two successive estimates agree to
/// rel_tol (relative), starting from `order`, capped at `max_order`.
double gauss_integrate_checked(const std::function<double(double)>& f,
                               double a, double b, int order = 10,
                               double rel_tol = 1e-10, int max_order = 80);

}  // namespace curveflow
