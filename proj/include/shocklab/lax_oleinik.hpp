#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "shocklab/flux.hpp"
#include "shocklab/legendre.hpp"
#include "shocklab/step_function.hpp"

namespace shocklab {

struct CharData {
  double x;
  double t;
  double v;
  double y_minus;
  double y_plus;
  std::vector<double> minimizers;  // ascending
};

struct SearchWindow {
  double p0;  // |p| > p0 implies f*(p) - M|p| > f*(0)
  double M;   // sup |u0|
  double p_lo;
  double p_hi;
};

struct PointValue {
  double value;  // right-continuous value
  double left;
  double right;
  bool at_shock;
};

// Minimizes v0(y) + t f*((x - y)/t) for a convex flux and step data, where
// v0 is the primitive of u0 vanishing at 0. The objective is piecewise linear
// in y, so the minimum is found by enumerating its kinks inside the window.
class LaxOleinik {
 public:
  LaxOleinik(const Flux& fl, StepFunction u0, double window_scale = 1.0);

  const SearchWindow& window() const { return window_; }
  const DualFlux& dual() const { return dual_; }
  const StepFunction& data() const { return u0_; }

  double primitive(double y) const;
  double objective(double x, double t, double y) const;
  CharData value(double x, double t) const;
  // Same, with minimizer-set membership decided by rel_tol * (1 + |v|) instead of eps_v.
  CharData value(double x, double t, double rel_tol) const;
  PointValue solve(double x, double t) const;

 private:
  DualFlux dual_;
  StepFunction u0_;
  std::vector<double> cumulative_;  // primitive at each jump
  SearchWindow window_;
};

inline double eps_v(double v) { return 1e-9 * (1.0 + std::abs(v)); }

SearchWindow search_window(const DualFlux& dual, double M);

CharData value_function(const Flux& fl, const StepFunction& u0, double x, double t);
PointValue solve_pointwise(const Flux& fl, const StepFunction& u0, double x, double t);

}  // namespace shocklab
