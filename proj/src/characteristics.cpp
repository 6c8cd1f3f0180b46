#include "shocklab/characteristics.hpp"

#include <cmath>

#include "shocklab/error.hpp"

namespace shocklab {

namespace {

// Minimizer membership slack for the bisection predicate. The default eps_v
// would blur y+- over an x-band wider than the bisection tolerance.
constexpr double kFootTol = 1e-12;

}  // namespace

double r_tolerance(const LaxOleinik& lo, double alpha, double t) {
  return 1e-10 * (1.0 + std::abs(alpha) + lo.window().p0 * t);
}

double r_point(const LaxOleinik& lo, double alpha, CurveSide side, double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::NonPositiveTime, "curve time must be positive");
  double reach = lo.window().p0 * t + 1.0;
  double a = alpha - reach;
  double b = alpha + reach;
  // pred(x) is false left of the answer and true right of it.
  auto pred = [&](double x) {
    CharData cd = lo.value(x, t, kFootTol);
    return side == CurveSide::Plus ? cd.y_plus > alpha : cd.y_minus >= alpha;
  };
  if (pred(a) || !pred(b)) {
    throw Error(ErrorCode::WindowExceeded, "characteristic foot left the bisection bracket");
  }
  double eps = r_tolerance(lo, alpha, t);
  while (b - a > eps) {
    double mid = 0.5 * (a + b);
    if (pred(mid)) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return side == CurveSide::Plus ? a : b;
}

CharCurve r_curve(const LaxOleinik& lo, double alpha, CurveSide side,
                  const std::vector<double>& t_grid) {
  CharCurve c{alpha, side, t_grid, {}};
  c.positions.reserve(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
      throw Error(ErrorCode::NonMonotoneBreakpoints, "time grid must increase");
    }
    c.positions.push_back(r_point(lo, alpha, side, t_grid[i]));
  }
  return c;
}

CharCurve r_curve(const Flux& fl, const StepFunction& u0, double alpha, CurveSide side,
                  const std::vector<double>& t_grid) {
  return r_curve(LaxOleinik(fl, u0), alpha, side, t_grid);
}

bool is_characteristic_line(const Flux& fl, const StepFunction& u0, double a, double p_slope,
                            double horizon, int n_checks) {
  LaxOleinik lo(fl, u0);
  if (!lo.dual().contains(p_slope)) return false;
  for (int k = 1; k <= n_checks; ++k) {
    double t = horizon * k / n_checks;
    double x = a + p_slope * t;
    CharData cd = lo.value(x, t);
    if (lo.objective(x, t, a) > cd.v + eps_v(cd.v)) return false;
  }
  return true;
}

}  // namespace shocklab
