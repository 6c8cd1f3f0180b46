#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "shocklab/error.hpp"
#include "shocklab/front_tracking.hpp"
#include "shocklab/lax_oleinik.hpp"
#include "support.hpp"

using namespace shocklab;
using TRng = testsupport::Rng;

namespace {

Flux v_flux() { return make_flux({-2, -1, 0, 1, 2}, {4, 1, 0, 1, 4}); }

Flux burgers(double lo, double hi, double h) {
  AnalyticFluxSpec spec;
  spec.kind = FluxKind::Burgers;
  spec.lo = lo;
  spec.hi = hi;
  spec.mesh = h;
  return approximate_pw_affine(spec);
}

// Minimum of the objective over a uniform grid of the search window.
double grid_minimum(const LaxOleinik& lo, double x, double t, int n) {
  double y_lo = x - t * lo.window().p_hi;
  double y_hi = x - t * lo.window().p_lo;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) best = std::min(best, lo.objective(x, t, y_lo + (y_hi - y_lo) * i / n));
  return best;
}

}  // namespace

TEST_CASE("value function examples") {
  CharData zero = value_function(v_flux(), StepFunction(0.0), 0.5, 2);
  CHECK(zero.v == 0);
  CHECK(zero.y_minus == -1.5);
  CHECK(zero.y_plus == 2.5);

  CharData fan = value_function(v_flux(), StepFunction({0}, {-1, 1}), 0, 1);
  CHECK(fan.v == 0);
  CHECK(fan.y_minus == 0);
  CHECK(fan.y_plus == 0);

  Flux b = burgers(-2, 2, 1.0 / 64);
  CharData sh = value_function(b, StepFunction({0}, {1, 0}), 0.25, 1);
  CHECK(sh.y_plus < 0);
  LaxOleinik lo(b, StepFunction({0}, {1, 0}));
  CHECK(sh.v == doctest::Approx(lo.objective(0.25, 1, sh.y_plus)).epsilon(1e-12));
  for (double y : sh.minimizers) CHECK(lo.objective(0.25, 1, y) <= sh.v + eps_v(sh.v));

  CHECK_THROWS_AS(value_function(v_flux(), StepFunction(0.0), 0, 0), Error);
  CHECK_THROWS_AS(value_function(make_flux({-1, 0, 1}, {0, 1, 0}), StepFunction(0.0), 0, 1), Error);
}

TEST_CASE("solve_pointwise examples") {
  PointValue fan = solve_pointwise(v_flux(), StepFunction({0}, {-1, 1}), 0, 1);
  CHECK(fan.value == 0);
  CHECK_FALSE(fan.at_shock);

  Flux b = burgers(-3, 3, 0.25);
  StepFunction shock({0}, {1, 0});
  for (double t : {0.5, 1.0, 4.0}) {
    CHECK(solve_pointwise(b, shock, 0.25 * t, t).value == 1);
    CHECK(solve_pointwise(b, shock, 0.75 * t, t).value == 0);
    PointValue at = solve_pointwise(b, shock, 0.5 * t, t);
    CHECK(at.at_shock);
    CHECK(at.left == 1);
    CHECK(at.right == 0);
  }

  CHECK(solve_pointwise(b, StepFunction(0.75), 3, 2).value == 0.75);
  CHECK(solve_pointwise(b, StepFunction(-1.25), -7, 0.5).value == -1.25);
}

TEST_CASE("search window") {
  LaxOleinik lo(v_flux(), StepFunction({0}, {-1, 1}));
  CHECK(lo.window().M == 1);
  CHECK(lo.window().p0 >= 1);
  // f*(p) - |p| > f*(0) needs p - 1 - p > 0 on [1,3]: never, so the window is the whole dual domain.
  CHECK(lo.window().p_lo == -3);
  CHECK(lo.window().p_hi == 3);

  Flux b = burgers(-4, 4, 0.25);
  LaxOleinik lb(b, StepFunction({0}, {1, -1}));
  const SearchWindow& w = lb.window();
  CHECK(w.p0 >= 1);
  CHECK(w.p_hi < b.slopes().back());
  for (double p : lb.dual().breakpoints()) {
    if (std::abs(p) > w.p0) CHECK(lb.dual()(p) - w.M * std::abs(p) > lb.dual()(0));
  }
}

TEST_CASE("doubling the window changes nothing") {
  TRng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Flux f = testsupport::random_convex_flux(rng, 16, -4, 4);
    StepFunction u0 = testsupport::random_step(rng, 6, -3, 3, -3, 3);
    LaxOleinik a(f, u0), b(f, u0, 2.0);
    for (int k = 0; k < 20; ++k) {
      double x = rng.dyadic(-6, 6), t = rng.dyadic(0.0625, 4);
      CharData ca = a.value(x, t), cb = b.value(x, t);
      CHECK(ca.v == doctest::Approx(cb.v).epsilon(1e-12));
      CHECK(ca.y_minus == doctest::Approx(cb.y_minus).epsilon(1e-12));
      CHECK(ca.y_plus == doctest::Approx(cb.y_plus).epsilon(1e-12));
    }
  }
}

TEST_CASE("minimum beats a dense grid and the extreme points are nondecreasing in x") {
  TRng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    Flux f = testsupport::random_convex_flux(rng, 12, -3, 3);
    StepFunction u0 = testsupport::random_step(rng, 5, -2, 2, -3, 3);
    LaxOleinik lo(f, u0);
    double t = rng.dyadic(0.25, 3);
    double prev_minus = -1e300, prev_plus = -1e300;
    for (int i = 0; i <= 60; ++i) {
      double x = -4 + 8.0 * i / 60;
      CharData cd = lo.value(x, t);
      CHECK(cd.v <= grid_minimum(lo, x, t, 4000) + eps_v(cd.v));
      CHECK(cd.y_minus <= cd.y_plus);
      CHECK(std::abs(x - cd.y_minus) <= lo.window().p0 * t * (1 + 1e-12));
      CHECK(std::abs(x - cd.y_plus) <= lo.window().p0 * t * (1 + 1e-12));
      CHECK(cd.y_minus >= prev_minus);
      CHECK(cd.y_plus >= prev_plus);
      prev_minus = cd.y_minus;
      prev_plus = cd.y_plus;
    }
  }
}

TEST_CASE("dynamic programming through an intermediate time") {
  TRng rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    Flux f = testsupport::random_convex_flux(rng, 12, -3, 3);
    StepFunction u0 = testsupport::random_step(rng, 5, -2, 2, -3, 3);
    double s = rng.dyadic(0.125, 1.5), t = s + rng.dyadic(0.125, 1.5);
    SimState st = init_state(f, u0);
    StepFunction us = advance(st, s);
    LaxOleinik direct(f, u0), restart(f, us);
    double v0s = direct.value(0, s).v;
    for (int k = 0; k < 20; ++k) {
      double x = rng.dyadic(-4, 4);
      double v = direct.value(x, t).v;
      double w = v0s + restart.value(x, t - s).v;
      CHECK(w == doctest::Approx(v).epsilon(1e-9).scale(1));
    }
  }
}

TEST_CASE("agrees with front tracking") {
  TRng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    Flux f = testsupport::random_convex_flux(rng, 10, -3, 3);
    StepFunction u0 = testsupport::random_step(rng, 6, -4, 4, -3, 3);
    LaxOleinik lo(f, u0);
    SimState st = init_state(f, u0);
    for (double t : {0.5, 1.0, 3.0}) {
      StepFunction ft = advance(st, t);
      std::vector<double> seeds;
      for (int i = 0; i <= 400; ++i) seeds.push_back(-10 + 20.0 * i / 400);
      StepFunction lx = testsupport::lax_oleinik_profile(lo, t, seeds, -10, 10);
      CHECK(l1_distance(ft, lx, -10, 10) <= 1e-6);
    }
  }
}
