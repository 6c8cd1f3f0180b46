#pragma once

#include <vector>

#include "shocklab/flux.hpp"
#include "shocklab/lax_oleinik.hpp"
#include "shocklab/step_function.hpp"

namespace shocklab {

enum class CurveSide { Plus, Minus };

struct CharCurve {
  double alpha;
  CurveSide side;
  std::vector<double> times;
  std::vector<double> positions;
};

// R+(t) = sup{x : y+(x,t) <= alpha}, R-(t) = inf{x : y-(x,t) >= alpha},
// located by bisection on the monotone maps x -> y+-(x,t).
double r_point(const LaxOleinik& lo, double alpha, CurveSide side, double t);

CharCurve r_curve(const Flux& fl, const StepFunction& u0, double alpha, CurveSide side,
                  const std::vector<double>& t_grid);
CharCurve r_curve(const LaxOleinik& lo, double alpha, CurveSide side,
                  const std::vector<double>& t_grid);

// Bisection tolerance used by r_point at time t.
double r_tolerance(const LaxOleinik& lo, double alpha, double t);

bool is_characteristic_line(const Flux& fl, const StepFunction& u0, double a, double p_slope,
                            double horizon, int n_checks);

}  // namespace shocklab
