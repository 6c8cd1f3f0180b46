#include "shocklab/riemann.hpp"

#include "shocklab/error.hpp"

namespace shocklab {

double front_speed(const Flux& fl, double l, double r) {
  if (l == r) throw Error(ErrorCode::EqualStates, "front with equal states");
  return (fl(l) - fl(r)) / (l - r);
}

WaveFan solve_riemann(const Flux& fl, double u_l, double u_r) {
  if (!fl.contains(u_l) || !fl.contains(u_r)) {
    throw Error(ErrorCode::StateOutOfRange, "Riemann states outside working interval");
  }
  WaveFan fan{u_l, u_r, {}};
  if (u_l == u_r) return fan;
  if (u_l < u_r) {
    Flux h = hull(fl, u_l, u_r, HullSide::Lower);
    const auto& x = h.breakpoints();
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      fan.fronts.push_back({front_speed(fl, x[i], x[i + 1]), x[i], x[i + 1]});
    }
  } else {
    Flux h = hull(fl, u_r, u_l, HullSide::Upper);
    const auto& x = h.breakpoints();
    for (std::size_t i = x.size() - 1; i > 0; --i) {
      fan.fronts.push_back({front_speed(fl, x[i], x[i - 1]), x[i], x[i - 1]});
    }
  }
  return fan;
}

}  // namespace shocklab
