#pragma once

#include <vector>

#include "shocklab/flux.hpp"

namespace shocklab {

struct WaveFront {
  double speed;
  double left;
  double right;

  bool operator==(const WaveFront&) const = default;
};

// Entropy solution of a Riemann problem: fronts ordered by strictly
// increasing speed, with chained states from u_l to u_r.
struct WaveFan {
  double u_left;
  double u_right;
  std::vector<WaveFront> fronts;
};

// Rankine-Hugoniot quotient (f(l) - f(r)) / (l - r). Symmetric in (l, r) bit for bit.
double front_speed(const Flux& fl, double l, double r);

WaveFan solve_riemann(const Flux& fl, double u_l, double u_r);

}  // namespace shocklab
