#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "shocklab/error.hpp"
#include "shocklab/legendre.hpp"
#include "support.hpp"

using namespace shocklab;
using testsupport::Rng;

namespace {

Flux burgers_mesh(double h) {
  AnalyticFluxSpec s;
  s.kind = FluxKind::Burgers;
  s.lo = -3;
  s.hi = 3;
  s.mesh = h;
  return approximate_pw_affine(s);
}

}  // namespace

TEST_CASE("dual of the V-shaped flux") {
  Flux v = make_flux({-2, -1, 0, 1, 2}, {4, 1, 0, 1, 4});
  DualFlux d = legendre_dual(v);
  CHECK(d.breakpoints() == std::vector<double>{-3, -1, 1, 3});
  CHECK(d.maximizers() == std::vector<double>{-1, 0, 1});
  for (double p = -1; p <= 1; p += 0.125) CHECK(d(p) == 0);
  for (double p = 1; p <= 3; p += 0.125) CHECK(d(p) == p - 1);
  for (double p = -3; p <= -1; p += 0.125) CHECK(d(p) == -p - 1);
  CHECK(d.left_slope(1) == 0);
  CHECK(d.right_slope(1) == 1);
  CHECK(d.left_slope(-3) == -2);
  CHECK(d.right_slope(3) == 2);
  CHECK_THROWS_AS(d(3.5), Error);
}

TEST_CASE("dual of a fine burgers mesh approximates p^2/2") {
  double h = 0.01;
  Flux f = burgers_mesh(h);
  DualFlux d = legendre_dual(f);
  double worst = 0;
  for (double p = d.lo(); p <= d.hi(); p += 0.001) worst = std::max(worst, std::abs(d(p) - p * p / 2));
  CHECK(worst <= h * h / 8 * (1 + 1e-6));
}

TEST_CASE("affine flux has a point dual") {
  Flux f = make_flux({-1, 0, 2}, {-2, 0, 4});
  DualFlux d = legendre_dual(f);
  CHECK(d.breakpoints() == std::vector<double>{2});
  CHECK(d(2) == 2 * -1 - (-2));
  CHECK(bidual(f) == f);
}

TEST_CASE("non-convex input is rejected") {
  Flux f = make_flux({-1, 0, 1}, {0, 1, 0});
  try {
    legendre_dual(f);
    FAIL("expected NotConvex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConvex);
  }
  CHECK_THROWS_AS(bidual(f), Error);
}

TEST_CASE("duplicate slopes collapse to one dual breakpoint") {
  Flux f = make_flux({-2, -1, 0, 1, 2}, {2, 1, 0, 1, 2});
  DualFlux d = legendre_dual(f);
  CHECK(d.breakpoints() == std::vector<double>{-1, 1});
  CHECK(d.maximizers() == std::vector<double>{0});
  CHECK(d(-1) == 0);
  CHECK(d.left_slope(-1) == -2);
}

TEST_CASE("bidual reproduces the primal") {
  Flux v = make_flux({-2, -1, 0, 1, 2}, {4, 1, 0, 1, 4});
  CHECK(bidual(v) == v);
  Flux b = burgers_mesh(0.01);
  Flux bb = bidual(b);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(std::abs(bb.values()[i] - b.values()[i]) <= 1e-9);
}

TEST_CASE("dual equals the max over breakpoints at random slopes") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    Flux f = testsupport::random_convex_flux(rng, 2 + static_cast<int>(rng.integer(0, 28)));
    DualFlux d = legendre_dual(f);
    for (int k = 0; k < 10; ++k) {
      double p = rng.uniform(d.lo(), d.hi());
      CHECK(std::abs(d(p) - testsupport::grid_conjugate(f, f.breakpoints(), p)) <= 1e-9);
    }
  }
}

TEST_CASE("Young's inequality with equality on the subdifferential") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Flux f = testsupport::random_convex_flux(rng, 3 + static_cast<int>(rng.integer(0, 20)));
    DualFlux d = legendre_dual(f);
    for (double q : f.breakpoints()) {
      double sl = q == f.lo() ? d.lo() : f.left_slope(q);
      double sr = q == f.hi() ? d.hi() : f.right_slope(q);
      for (double p : d.breakpoints()) {
        double gap = f(q) + d(p) - p * q;
        CHECK(gap >= -1e-12);
        if (p >= sl && p <= sr) CHECK(std::abs(gap) <= 1e-12);
      }
    }
  }
}
