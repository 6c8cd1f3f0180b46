#include "shocklab/lax_oleinik.hpp"

#include <algorithm>
#include <limits>

#include "shocklab/error.hpp"

namespace shocklab {

namespace {

// Root of the affine interpolation of h between (p0, h0 <= 0) and (p1, h1 > 0).
double crossing(double p0, double h0, double p1, double h1) {
  return p0 + (p1 - p0) * (-h0) / (h1 - h0);
}

}  // namespace

SearchWindow search_window(const DualFlux& dual, double M) {
  SearchWindow w{1.0, M, dual.lo(), dual.hi()};
  if (!dual.contains(0.0)) {
    w.p0 = std::max({1.0, std::abs(dual.lo()), std::abs(dual.hi())});
    return w;
  }
  double f0 = dual(0.0);
  auto h = [&](double p) { return dual(p) - M * std::abs(p) - f0; };
  const auto& ps = dual.breakpoints();

  double p_plus = dual.hi();
  double prev = 0.0, h_prev = 0.0;
  for (double p : ps) {
    if (p <= 0.0) continue;
    double hp = h(p);
    if (hp > 0.0) {
      p_plus = crossing(prev, h_prev, p, hp);
      break;
    }
    prev = p;
    h_prev = hp;
  }
  double p_minus = dual.lo();
  prev = 0.0;
  h_prev = 0.0;
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
    double p = *it;
    if (p >= 0.0) continue;
    double hp = h(p);
    if (hp > 0.0) {
      p_minus = crossing(prev, h_prev, p, hp);
      break;
    }
    prev = p;
    h_prev = hp;
  }
  w.p0 = std::max({1.0, p_plus, -p_minus});
  return w;
}

LaxOleinik::LaxOleinik(const Flux& fl, StepFunction u0, double window_scale)
    : dual_(legendre_dual(fl)), u0_(std::move(u0)) {
  double M = std::max(std::abs(u0_.min()), std::abs(u0_.max()));
  window_ = search_window(dual_, M);
  window_.p0 *= window_scale;
  window_.p_lo = std::max(dual_.lo(), -window_.p0);
  window_.p_hi = std::min(dual_.hi(), window_.p0);
  const auto& js = u0_.jumps();
  cumulative_.reserve(js.size());
  for (double x : js) cumulative_.push_back(u0_.integral(0.0, x));
}

double LaxOleinik::primitive(double y) const {
  const auto& js = u0_.jumps();
  const auto& vs = u0_.values();
  if (js.empty()) return vs[0] * y;
  auto it = std::upper_bound(js.begin(), js.end(), y);
  std::size_t i = static_cast<std::size_t>(it - js.begin());
  if (i == 0) return cumulative_[0] + vs[0] * (y - js[0]);
  return cumulative_[i - 1] + vs[i] * (y - js[i - 1]);
}

double LaxOleinik::objective(double x, double t, double y) const {
  double p = std::clamp((x - y) / t, dual_.lo(), dual_.hi());
  return primitive(y) + t * dual_(p);
}

CharData LaxOleinik::value(double x, double t) const { return value(x, t, 1e-9); }

CharData LaxOleinik::value(double x, double t, double rel_tol) const {
  if (!(t > 0.0)) throw Error(ErrorCode::NonPositiveTime, "query time must be positive");
  struct Cand {
    double y;
    double p;
  };
  std::vector<Cand> cands;
  double y_lo = x - t * window_.p_hi;
  double y_hi = x - t * window_.p_lo;
  cands.push_back({y_lo, window_.p_hi});
  cands.push_back({y_hi, window_.p_lo});
  const auto& js = u0_.jumps();
  for (auto it = std::lower_bound(js.begin(), js.end(), y_lo); it != js.end() && *it <= y_hi; ++it) {
    cands.push_back({*it, std::clamp((x - *it) / t, window_.p_lo, window_.p_hi)});
  }
  for (double p : dual_.breakpoints()) {
    if (p > window_.p_lo && p < window_.p_hi) cands.push_back({x - t * p, p});
  }
  std::vector<std::pair<double, double>> scored;  // (y, phi)
  scored.reserve(cands.size());
  double vmin = std::numeric_limits<double>::infinity();
  for (const Cand& c : cands) {
    double phi = primitive(c.y) + t * dual_(c.p);
    scored.emplace_back(c.y, phi);
    vmin = std::min(vmin, phi);
  }
  double tol = rel_tol * (1.0 + std::abs(vmin));
  CharData out{x, t, vmin, 0.0, 0.0, {}};
  for (const auto& [y, phi] : scored) {
    if (phi <= vmin + tol) out.minimizers.push_back(y);
  }
  std::sort(out.minimizers.begin(), out.minimizers.end());
  out.minimizers.erase(std::unique(out.minimizers.begin(), out.minimizers.end()),
                       out.minimizers.end());
  out.y_minus = out.minimizers.front();
  out.y_plus = out.minimizers.back();
  return out;
}

PointValue LaxOleinik::solve(double x, double t) const {
  CharData cd = value(x, t);
  const auto& js = u0_.jumps();
  auto is_jump = [&](double y) {
    auto it = std::lower_bound(js.begin(), js.end(), y - 1e-12 * (1.0 + std::abs(y)));
    return it != js.end() && std::abs(*it - y) <= 1e-12 * (1.0 + std::abs(y));
  };
  auto slope_at = [&](double y) { return std::clamp((x - y) / t, dual_.lo(), dual_.hi()); };
  double right = is_jump(cd.y_plus) ? dual_.right_slope(slope_at(cd.y_plus)) : u0_(cd.y_plus);
  double left = is_jump(cd.y_minus) ? dual_.left_slope(slope_at(cd.y_minus)) : u0_(cd.y_minus);
  return {right, left, right, left != right};
}

CharData value_function(const Flux& fl, const StepFunction& u0, double x, double t) {
  return LaxOleinik(fl, u0).value(x, t);
}

PointValue solve_pointwise(const Flux& fl, const StepFunction& u0, double x, double t) {
  return LaxOleinik(fl, u0).solve(x, t);
}

}  // namespace shocklab
