#include "shocklab/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shocklab/error.hpp"

namespace shocklab {

DualFlux::DualFlux(std::vector<double> breakpoints, std::vector<double> values,
                   std::vector<double> maximizers, std::vector<double> maximizer_values,
                   double primal_lo, double primal_hi)
    : breakpoints_(std::move(breakpoints)),
      values_(std::move(values)),
      maximizers_(std::move(maximizers)),
      maximizer_values_(std::move(maximizer_values)),
      primal_lo_(primal_lo),
      primal_hi_(primal_hi) {}

double DualFlux::operator()(double p) const {
  if (!contains(p)) throw Error(ErrorCode::StateOutOfRange, "slope outside dual domain");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), p);
  std::size_t j = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  if (p == breakpoints_[j]) return values_[j];
  return maximizers_[j] * p - maximizer_values_[j];
}

double DualFlux::left_slope(double p) const {
  if (!contains(p)) throw Error(ErrorCode::StateOutOfRange, "slope outside dual domain");
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), p);
  std::size_t j = static_cast<std::size_t>(it - breakpoints_.begin());
  if (j == 0) return primal_lo_;
  return maximizers_[j - 1];
}

double DualFlux::right_slope(double p) const {
  if (!contains(p)) throw Error(ErrorCode::StateOutOfRange, "slope outside dual domain");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), p);
  std::size_t j = static_cast<std::size_t>(it - breakpoints_.begin());
  if (j == breakpoints_.size()) return primal_hi_;
  return maximizers_[j - 1];
}

DualFlux legendre_dual(const Flux& fl) {
  const auto& b = fl.breakpoints();
  const auto& v = fl.values();
  const auto& m = fl.slopes();
  double scale = 1.0;
  for (double s : m) scale = std::max(scale, std::abs(s));
  if (!fl.is_convex(kSlopeTol * scale)) {
    throw Error(ErrorCode::NotConvex, "conjugate requires nondecreasing slopes");
  }
  std::vector<double> ps, vals, maxs, gmaxs;
  // Group consecutive segments of equal slope into runs; each run is one dual breakpoint.
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!ps.empty() && m[i] <= ps.back()) continue;
    if (!ps.empty()) {
      maxs.push_back(b[i]);
      gmaxs.push_back(v[i]);
    }
    ps.push_back(m[i]);
    vals.push_back(m[i] * b[i] - v[i]);
  }
  return DualFlux(std::move(ps), std::move(vals), std::move(maxs), std::move(gmaxs), fl.lo(), fl.hi());
}

Flux bidual(const Flux& fl) {
  DualFlux dual = legendre_dual(fl);
  const auto& ps = dual.breakpoints();
  const auto& vs = dual.values();
  std::vector<double> out;
  out.reserve(fl.size());
  for (double q : fl.breakpoints()) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < ps.size(); ++j) best = std::max(best, ps[j] * q - vs[j]);
    out.push_back(best);
  }
  return Flux(fl.breakpoints(), std::move(out));
}

}  // namespace shocklab
