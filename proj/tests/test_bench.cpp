#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "curveflow/bench.hpp"
#include "helpers.hpp"

using namespace curveflow;
using namespace cf_test;

TEST_CASE("catalog curve construction") {
  auto std60 = catalog_curve("standard", {}, 60, MeshPolicy::Kind::PhaseUniform);
  CHECK(std::fabs(std60.radial().eval(0.0) - 0.5) < 1e-14);  // node value, Eq at 0

  CatalogParams ep;
  ep.a = 1.0;
  ep.b = 0.5;
  auto ell = catalog_curve("ellipse", ep, 80, MeshPolicy::Kind::PhaseUniform);
  CHECK(std::fabs(ell.radial().eval(0.0) - 1.0) < 1e-13);
  CHECK(std::fabs(ell.radial().eval(kPi / 2) - 0.5) < 1e-13);

  auto d3 = catalog_curve("D3", {}, 60, MeshPolicy::Kind::PhaseUniform);
  CHECK(symmetry_residual(d3, SymmetryOp::rotation(3)) <= 1e-10);

  CHECK_THROWS_AS(catalog_curve("nonsense", {}, 60, MeshPolicy::Kind::PhaseUniform),
                  std::invalid_argument);
  CatalogParams bad;
  bad.delta = 0.6;  // r dips below zero
  bad.n_sym = 3;
  CHECK_THROWS_AS(catalog_curve("dn", bad, 60, MeshPolicy::Kind::PhaseUniform),
                  std::invalid_argument);
}

TEST_CASE("catalog arclength meshes are arclength uniform") {
  CatalogParams ep;
  ep.a = 1.0;
  ep.b = 0.5;
  auto ell = catalog_curve("ellipse", ep, 40, MeshPolicy::Kind::ArclengthUniform);
  const double L = ell.total_arclength();
  for (int j = 0; j < 40; ++j)
    CHECK(std::fabs(arclength(ell, ell.mesh().node(j)) - L * j / 40) < 1e-6 * L);
}

TEST_CASE("centered catalog curves sit on their centroid") {
  auto s = catalog_curve_centered("standard", {}, 80, MeshPolicy::Kind::PhaseUniform);
  CHECK((s.centroid() - s.refpoint()).norm() < 1e-9);
  CHECK((s.refpoint() - brute_centroid(cf_test::standard_r)).norm() < 1e-7);

  // symmetric curves stay referenced to the origin
  auto d4 = catalog_curve_centered("D4", {}, 64, MeshPolicy::Kind::ArclengthUniform);
  CHECK(d4.refpoint().norm() == 0.0);
  CHECK(symmetry_residual(d4, SymmetryOp::rotation(4)) < 1e-10);
}

TEST_CASE("catalog rotation rotates the curve rigidly") {
  CatalogParams rot;
  rot.rotation = kPi / 5;
  auto base = catalog_formula("standard", {});
  auto turned = catalog_formula("standard", rot);
  for (double phi : {-2.0, 0.0, 0.9})
    CHECK(turned.r(phi + kPi / 5) == doctest::Approx(base.r(phi)).epsilon(1e-14));

  auto cent = catalog_curve_centered("standard", {}, 80, MeshPolicy::Kind::PhaseUniform);
  auto cent_rot =
      catalog_curve_centered("standard", rot, 80, MeshPolicy::Kind::PhaseUniform);
  CHECK((cent_rot.refpoint() - rotate(cent.refpoint(), kPi / 5)).norm() < 1e-10);
}

TEST_CASE("circle oracle closed forms") {
  FlowParams csf(0.0, 1.0);
  CHECK(circle_oracle_radius(0.5, csf, 0.08) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(circle_oracle_tmax(0.5, csf) == doctest::Approx(0.125).epsilon(1e-12));

  FlowParams eik(0.0, 0.0);
  CHECK(circle_oracle_radius(0.5, eik, 0.2) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(circle_oracle_tmax(0.5, eik) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(circle_oracle_radius(0.5, csf, 0.2), std::invalid_argument);
}

TEST_CASE("general circle integrator reproduces the closed forms") {
  FlowParams csf(0.0, 1.0);
  CHECK(std::fabs(circle_oracle_tmax(0.5, csf, true) - 0.125) < 1e-9);
  for (double t : {0.01, 0.06, 0.12})
    CHECK(std::fabs(circle_oracle_radius(0.5, csf, t, true) -
                    std::sqrt(0.25 - 2 * t)) < 1e-9);
}

TEST_CASE("general circle integrator matches an RK4 oracle at alpha = 1/3") {
  FlowParams aff(0.0, 1.0 / 3.0);
  // independent oracle: classical RK4 on dR/dt = -R^(-1/3)
  double r = 0.5;
  const double h = 1e-6;
  const double t_star = 0.1;
  auto f = [](double radius) { return -std::pow(radius, -1.0 / 3.0); };
  for (int i = 0; i < 100000; ++i) {
    const double k1 = f(r);
    const double k2 = f(r + 0.5 * h * k1);
    const double k3 = f(r + 0.5 * h * k2);
    const double k4 = f(r + h * k3);
    r += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  CHECK(std::fabs(circle_oracle_radius(0.5, aff, t_star) - r) < 1e-9);
}

TEST_CASE("regular n-gon quotient") {
  CHECK(ngon_quotient(4) == doctest::Approx(kPi / 4).epsilon(1e-14));
  CHECK(ngon_quotient(3) == doctest::Approx(0.6046).epsilon(1e-4));
  CHECK(ngon_quotient(5) == doctest::Approx(0.8648).epsilon(1e-4));
  CHECK(ngon_quotient(6) == doctest::Approx(0.9069).epsilon(1e-4));
  double prev = 0.0;
  for (int n = 3; n <= 100; ++n) {
    const double q = ngon_quotient(n);
    CHECK(q > prev);
    CHECK(q < 1.0);
    prev = q;
  }
  CHECK(prev > 0.999);
  CHECK_THROWS_AS(ngon_quotient(2), std::invalid_argument);
}

TEST_CASE("n-fold homothetic admissibility bound") {
  CHECK(dn_admissible(3, 0.1));
  CHECK_FALSE(dn_admissible(4, 0.1));
  CHECK_FALSE(dn_admissible(5, 0.05));
  CHECK(dn_admissible(4, 0.05));
  CHECK(dn_admissible(6, 0.01));
  CHECK_THROWS_AS(dn_admissible(1, 0.1), std::invalid_argument);
}

TEST_CASE("catalog convexity flags agree with the dense-grid condition") {
  struct Entry {
    const char* name;
    CatalogParams p;
    int n;
  };
  CatalogParams e2;
  e2.a = 1.0;
  e2.b = 0.5;
  CatalogParams e4;
  e4.a = 2.0;
  e4.b = 0.5;
  const Entry entries[] = {
      {"standard", {}, 80}, {"sine25", {}, 80},  {"sine57", {}, 160},
      {"ellipse", e2, 160}, {"ellipse", e4, 240}, {"D4", {}, 64},
      {"D5", {}, 60},       {"D6", {}, 60},       {"C4", {}, 64},
  };
  for (const Entry& e : entries) {
    auto formula = catalog_formula(e.name, e.p);
    double mn = 1e300;
    for (int i = 0; i < 100000; ++i) {
      const double phi = -kPi + kTwoPi * i / 100000;
      const double r = formula.r(phi), dr = formula.dr(phi), d2r = formula.d2r(phi);
      mn = std::min(mn, r * r + 2 * dr * dr - r * d2r);
    }
    auto state = catalog_curve(e.name, e.p, e.n, MeshPolicy::Kind::PhaseUniform);
    CHECK(is_convex(state) == (mn > 0.0));
  }
  // D3 with the catalog delta has exact curvature zeros at the flat points;
  // the convexity condition touches zero there
  auto d3 = catalog_formula("D3", {});
  double mn = 1e300;
  for (int i = 0; i < 100000; ++i) {
    const double phi = -kPi + kTwoPi * i / 100000;
    const double r = d3.r(phi), dr = d3.dr(phi), d2r = d3.d2r(phi);
    mn = std::min(mn, r * r + 2 * dr * dr - r * d2r);
  }
  CHECK(std::fabs(mn) < 1e-6);
}
