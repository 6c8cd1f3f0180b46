#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "shocklab/error.hpp"
#include "shocklab/riemann.hpp"
#include "support.hpp"

using namespace shocklab;
using testsupport::Rng;

TEST_CASE("V-flux shock and fan") {
  Flux v = make_flux({-2, -1, 0, 1, 2}, {4, 1, 0, 1, 4});
  WaveFan shock = solve_riemann(v, 1, -1);
  REQUIRE(shock.fronts.size() == 1);
  CHECK(shock.fronts[0] == WaveFront{0, 1, -1});

  WaveFan fan = solve_riemann(v, -1, 1);
  REQUIRE(fan.fronts.size() == 2);
  CHECK(fan.fronts[0] == WaveFront{-1, -1, 0});
  CHECK(fan.fronts[1] == WaveFront{1, 0, 1});

  CHECK(solve_riemann(v, 0.5, 0.5).fronts.empty());
  CHECK_THROWS_AS(solve_riemann(v, 0, 3), Error);
}

TEST_CASE("double well upper hull gives a stationary shock") {
  AnalyticFluxSpec s;
  s.kind = FluxKind::DoubleWell;
  s.lo = -3;
  s.hi = 3;
  s.mesh = 1.0 / 16;
  s.corners = {-2, 0, 2};
  Flux f = approximate_pw_affine(s);
  WaveFan fan = solve_riemann(f, 2, 0);
  REQUIRE(fan.fronts.size() == 1);
  CHECK(fan.fronts[0].speed == 0);
}

TEST_CASE("front_speed") {
  Flux burgers = make_flux({-1, 0, 1}, {0.5, 0, 0.5});
  CHECK(front_speed(burgers, 1, 0) == 0.5);
  CHECK(front_speed(burgers, -1, 1) == 0);
  Flux cubic = make_flux({-1, 0, 2}, {1, 0, -8});
  CHECK(front_speed(cubic, -1, 2) == -3);
  try {
    front_speed(cubic, 0, 0);
    FAIL("expected EqualStates");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EqualStates);
  }
}

TEST_CASE("convex flux fan visits every corner between the states") {
  Flux f = make_flux({-2, -1, 0, 0.5, 1, 2}, {3, 1, 0, 0.25, 1, 3});
  WaveFan fan = solve_riemann(f, -1.5, 1.5);
  std::vector<double> states{fan.fronts.front().left};
  for (const auto& w : fan.fronts) states.push_back(w.right);
  CHECK(states == std::vector<double>{-1.5, -1, 0, 0.5, 1, 1.5});
}

TEST_CASE("random fans are chained, ordered, entropy admissible") {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Flux f = testsupport::random_flux(rng, 2 + static_cast<int>(rng.integer(0, 30)));
    double ul = rng.dyadic(-4, 4, 6);
    double ur = rng.dyadic(-4, 4, 6);
    WaveFan fan = solve_riemann(f, ul, ur);
    if (ul == ur) {
      CHECK(fan.fronts.empty());
      continue;
    }
    REQUIRE(!fan.fronts.empty());
    CHECK(fan.fronts.front().left == ul);
    CHECK(fan.fronts.back().right == ur);
    Flux h = ul < ur ? hull(f, ul, ur, HullSide::Lower) : hull(f, ur, ul, HullSide::Upper);
    for (std::size_t i = 0; i < fan.fronts.size(); ++i) {
      const WaveFront& w = fan.fronts[i];
      CHECK(w.speed == (f(w.left) - f(w.right)) / (w.left - w.right));
      if (i > 0) {
        CHECK(fan.fronts[i - 1].right == w.left);
        CHECK(fan.fronts[i - 1].speed < w.speed);
      }
      auto lo = std::min(w.left, w.right);
      auto hi = std::max(w.left, w.right);
      auto it = std::find(h.breakpoints().begin(), h.breakpoints().end(), lo);
      REQUIRE(it != h.breakpoints().end());
      CHECK(*(it + 1) == hi);
      CHECK(testsupport::oleinik_ok(f, w, 1e-12));
    }
  }
}
