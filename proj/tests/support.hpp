#pragma once

// Random generators and brute-force oracles shared by the test suites.
// Breakpoints, slopes and data are drawn on dyadic lattices so that sums,
// differences and products stay exact in double precision.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "shocklab/flux.hpp"
#include "shocklab/lax_oleinik.hpp"
#include "shocklab/riemann.hpp"
#include "shocklab/step_function.hpp"

namespace testsupport {

using shocklab::Flux;
using shocklab::StepFunction;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  // Multiple of 2^-bits in [lo, hi].
  double dyadic(double lo, double hi, int bits = 4) {
    double s = std::ldexp(1.0, bits);
    return static_cast<double>(integer(static_cast<long>(std::ceil(lo * s)),
                                       static_cast<long>(std::floor(hi * s)))) / s;
  }

 private:
  std::mt19937_64 gen_;
};

// Distinct sorted multiples of 2^-bits in [lo, hi], always including lo and hi.
inline std::vector<double> dyadic_nodes(Rng& rng, int count, double lo, double hi, int bits = 4) {
  std::set<double> s{lo, hi};
  while (static_cast<int>(s.size()) < count) s.insert(rng.dyadic(lo, hi, bits));
  return {s.begin(), s.end()};
}

inline Flux random_convex_flux(Rng& rng, int n, double lo = -4.0, double hi = 4.0) {
  std::vector<double> b = dyadic_nodes(rng, n, lo, hi);
  std::vector<double> m;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) m.push_back(rng.dyadic(-4.0, 4.0));
  std::sort(m.begin(), m.end());
  std::vector<double> v{rng.dyadic(-2.0, 2.0)};
  for (std::size_t i = 0; i + 1 < b.size(); ++i) v.push_back(v.back() + m[i] * (b[i + 1] - b[i]));
  return Flux(b, v);
}

inline Flux random_flux(Rng& rng, int n, double lo = -4.0, double hi = 4.0) {
  std::vector<double> b = dyadic_nodes(rng, n, lo, hi);
  std::vector<double> v;
  for (std::size_t i = 0; i < b.size(); ++i) v.push_back(rng.dyadic(-4.0, 4.0));
  return Flux(b, v);
}

inline StepFunction random_step(Rng& rng, int pieces, double xlo, double xhi, double ulo,
                                 double uhi) {
  std::vector<double> js = dyadic_nodes(rng, pieces + 1, xlo, xhi);
  js.erase(js.begin());
  std::vector<double> vs;
  for (int i = 0; i < static_cast<int>(js.size()) + 1; ++i) vs.push_back(rng.dyadic(ulo, uhi));
  return StepFunction(js, vs);
}

// sup_q {p q - f(q)} over the given grid of q.
inline double grid_conjugate(const Flux& fl, const std::vector<double>& grid, double p) {
  double best = -std::numeric_limits<double>::infinity();
  for (double q : grid) best = std::max(best, p * q - fl(q));
  return best;
}

// Entropy condition for one front (l, r, s): every flux breakpoint v strictly
// between the states satisfies (f(l)-f(v))/(l-v) >= s >= (f(v)-f(r))/(v-r),
// whichever way the jump goes, up to `tol`.
inline bool oleinik_ok(const Flux& fl, const shocklab::WaveFront& w, double tol) {
  double l = w.left, r = w.right, s = w.speed;
  for (double v : fl.breakpoints()) {
    if (!(v > std::min(l, r) && v < std::max(l, r))) continue;
    double s_lv = (fl(l) - fl(v)) / (l - v);
    double s_vr = (fl(v) - fl(r)) / (v - r);
    double t = tol * (1.0 + std::abs(s));
    if (!(s_lv >= s - t && s >= s_vr - t)) return false;
  }
  return true;
}

// Pointwise u <= v on every piece of the common refinement wider than min_width.
inline bool dominated(const StepFunction& u, const StepFunction& v, double min_width) {
  std::vector<double> cuts(u.jumps());
  cuts.insert(cuts.end(), v.jumps().begin(), v.jumps().end());
  std::sort(cuts.begin(), cuts.end());
  if (cuts.empty()) return u(0.0) <= v(0.0);
  if (u(cuts.front() - 1.0) > v(cuts.front() - 1.0)) return false;
  if (u(cuts.back() + 1.0) > v(cuts.back() + 1.0)) return false;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double w = cuts[i + 1] - cuts[i];
    if (w <= min_width) continue;
    double mid = cuts[i] + 0.5 * w;
    if (u(mid) > v(mid)) return false;
  }
  return true;
}

// Piecewise-constant reconstruction of the Lax-Oleinik solution at time t on
// [a, b]. The solver is sampled at the seeds; between neighbouring samples with
// different values the switch points are bisected down to `width`.
inline StepFunction lax_oleinik_profile(const shocklab::LaxOleinik& lo, double t,
                                        std::vector<double> seeds, double a, double b,
                                        double width = 1e-12) {
  seeds.push_back(a);
  seeds.push_back(b);
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  std::vector<double> xs, us;
  for (double x : seeds) {
    if (x < a || x > b) continue;
    xs.push_back(x);
    us.push_back(lo.solve(x, t).value);
  }
  std::vector<double> jumps, values{us.front()};
  auto refine = [&](auto&& self, double xa, double ua, double xb, double ub) -> void {
    if (ua == ub) return;
    while (xb - xa > width) {
      double xm = xa + 0.5 * (xb - xa);
      double um = lo.solve(xm, t).value;
      if (um == ua) {
        xa = xm;
      } else if (um == ub) {
        xb = xm;
      } else {
        self(self, xa, ua, xm, um);
        self(self, xm, um, xb, ub);
        return;
      }
    }
    jumps.push_back(xa + 0.5 * (xb - xa));
    values.push_back(ub);
  };
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) refine(refine, xs[i], us[i], xs[i + 1], us[i + 1]);
  return StepFunction::from_pieces(jumps, values);
}

}  // namespace testsupport
