#include "shocklab/single_shock.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "shocklab/error.hpp"

namespace shocklab {

namespace {

double slope_at(const Flux& fl, double x) {
  return x == fl.lo() ? fl.right_slope(x) : fl.left_slope(x);
}

// Evaluation points for conditions on [C, D]: exact for piecewise-affine f.
std::vector<double> theta_grid(const Flux& fl, double C, double D) {
  std::vector<double> out{C};
  for (double b : fl.breakpoints()) {
    if (b > C && b < D) out.push_back(b);
  }
  if (D > C) out.push_back(D);
  return out;
}

std::vector<double> lattice(const Flux& fl, const StateRange& r) {
  std::vector<double> out{r.lo};
  for (double b : fl.breakpoints()) {
    if (b > r.lo && b < r.hi) out.push_back(b);
  }
  if (r.hi > r.lo) out.push_back(r.hi);
  return out;
}

// Tracks the worst (smallest-margin) failure of one named condition.
struct WorstFailure {
  WorstFailure(std::string name, double tolerance) : condition(std::move(name)), tol(tolerance) {}

  std::string condition;
  double tol;
  std::optional<Witness> worst;
  double worst_margin = std::numeric_limits<double>::infinity();
  double min_margin = std::numeric_limits<double>::infinity();

  void observe(double theta, double lhs, double rhs, double margin) {
    min_margin = std::min(min_margin, margin);
    if (margin > tol) return;
    if (!worst || margin < worst_margin) {
      worst = Witness{condition, theta, lhs, rhs, std::abs(margin) <= tol};
      worst_margin = margin;
    }
  }
  bool ok() const { return !worst.has_value(); }
};

}  // namespace

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::SatisfiedI: return "SatisfiedI";
    case VerdictKind::SatisfiedII1: return "SatisfiedII1";
    case VerdictKind::SatisfiedII2: return "SatisfiedII2";
    case VerdictKind::Violated: return "Violated";
  }
  return "Violated";
}

double strictness_tolerance(const Flux& fl) {
  double m = 0.0;
  for (double v : fl.values()) m = std::max(m, std::abs(v));
  return 1e-10 * (1.0 + m);
}

HypothesisReport check_hypothesis_H(const Flux& fl, const HypothesisParams& hp) {
  HypothesisReport rep;
  auto fail = [&](std::string cond, double theta, double lhs, double rhs) {
    rep.passed = false;
    rep.failures.push_back({std::move(cond), theta, lhs, rhs, lhs == rhs});
  };
  const double seq[] = {hp.alpha1, hp.alpha2, hp.C, hp.D, hp.beta2, hp.beta1};
  for (double x : seq) {
    if (!fl.contains(x)) {
      fail("in-range", x, x, fl.contains(x) ? x : (x < fl.lo() ? fl.lo() : fl.hi()));
    }
  }
  if (!rep.passed) return rep;
  if (!(hp.alpha1 <= hp.alpha2)) fail("ordering", hp.alpha1, hp.alpha1, hp.alpha2);
  if (!(hp.alpha2 < hp.C)) fail("ordering", hp.alpha2, hp.alpha2, hp.C);
  if (!(hp.C <= hp.D)) fail("ordering", hp.C, hp.C, hp.D);
  if (!(hp.D < hp.beta2)) fail("ordering", hp.D, hp.D, hp.beta2);
  if (!(hp.beta2 <= hp.beta1)) fail("ordering", hp.beta2, hp.beta2, hp.beta1);
  if (!rep.passed) return rep;

  rep.triplet = classify_triplet(fl, hp.C, hp.D);
  if (rep.triplet.type == TripletType::Neither) {
    throw Error(ErrorCode::NotATriplet, "flux is neither convex-convex nor convex-concave at (C, D)");
  }

  auto preimage = [&](const char* name, double e1, double e2, bool left_side) {
    double s1 = slope_at(fl, e1);
    double s2 = slope_at(fl, e2);
    double lo = std::min(s1, s2);
    double hi = std::max(s1, s2);
    for (double x : fl.breakpoints()) {
      bool side = left_side ? x < hp.C : x > hp.D;
      if (!side || x == fl.lo()) continue;
      double s = slope_at(fl, x);
      double tol = kSlopeTol * (1.0 + std::abs(s));
      bool in_band = s >= lo - tol && s <= hi + tol;
      bool in_range = x >= std::min(e1, e2) && x <= std::max(e1, e2);
      if (in_band != in_range) fail(name, x, s, in_band ? lo : hi);
    }
  };
  preimage("alpha-preimage", hp.alpha1, hp.alpha2, true);
  preimage("beta-preimage", hp.beta2, hp.beta1, false);

  double gap_left = hp.alpha2 + (hp.beta1 - hp.beta2);
  double gap_right = hp.beta2 - (hp.alpha2 - hp.alpha1);
  if (!(gap_left < hp.C)) fail("gap-left", hp.C, gap_left, hp.C);
  if (!(hp.D < gap_right)) fail("gap-right", hp.D, hp.D, gap_right);
  return rep;
}

ConditionVerdict check_main_conditions(const Flux& fl, const HypothesisParams& hp) {
  HypothesisReport h = check_hypothesis_H(fl, hp);
  if (!h.passed) {
    std::ostringstream os;
    os << "hypothesis check failed (" << h.failures.size() << " failures, first: "
       << h.failures.front().condition << " at " << h.failures.front().theta << ")";
    throw Error(ErrorCode::HypothesisNotChecked, os.str());
  }
  ConditionVerdict out;
  out.triplet = h.triplet.type;
  double tol = strictness_tolerance(fl);
  double a3 = hp.alpha2 + hp.beta1 - hp.beta2;
  double b3 = hp.beta2 - (hp.alpha2 - hp.alpha1);
  auto chords = [&](double th) {
    return std::array<double, 3>{eval_chord(fl, hp.alpha1, hp.beta1, th),
                                 eval_chord(fl, hp.alpha2, hp.beta2, th),
                                 eval_chord(fl, a3, b3, th)};
  };
  WorstFailure below{"below-chords", tol};
  WorstFailure above{"above-chords", tol};
  for (double th : theta_grid(fl, hp.C, hp.D)) {
    auto c = chords(th);
    double lo = std::min({c[0], c[1], c[2]});
    double hi = std::max({c[0], c[1], c[2]});
    double f = fl(th);
    below.observe(th, f, lo, lo - f);
    above.observe(th, f, hi, f - hi);
  }

  if (h.triplet.type == TripletType::ConvexConvex) {
    out.margin = below.min_margin;
    if (below.ok()) {
      out.kind = VerdictKind::SatisfiedI;
    } else {
      out.witnesses.push_back(*below.worst);
    }
    return out;
  }

  WorstFailure tan1{"tangent-alpha1-at-beta2", tol};
  double l1 = eval_tangent(fl, hp.alpha1, hp.beta2);
  double fb2 = fl(hp.beta2);
  tan1.observe(hp.beta2, l1, fb2, l1 - fb2);
  WorstFailure tan2{"tangent-beta1-at-alpha2", tol};
  double l2 = eval_tangent(fl, hp.beta1, hp.alpha2);
  double fa2 = fl(hp.alpha2);
  tan2.observe(hp.alpha2, l2, fa2, fa2 - l2);

  if (above.ok() && tan1.ok()) {
    out.kind = VerdictKind::SatisfiedII1;
    out.margin = above.min_margin;
    out.tangent_margin = tan1.min_margin;
  } else if (below.ok() && tan2.ok()) {
    out.kind = VerdictKind::SatisfiedII2;
    out.margin = below.min_margin;
    out.tangent_margin = tan2.min_margin;
  } else {
    for (const WorstFailure* w : {&above, &tan1, &below, &tan2}) {
      if (w->worst) out.witnesses.push_back(*w->worst);
    }
    out.margin = std::max(std::min(above.min_margin, tan1.min_margin),
                          std::min(below.min_margin, tan2.min_margin));
  }
  return out;
}

double compute_alpha0(const Flux& fl, double beta2, double lo, double hi) {
  double fb = fl(beta2);
  std::vector<double> cand;
  for (double b : fl.breakpoints()) {
    if (b > fl.lo() && b >= lo && b <= hi && b < beta2) cand.push_back(b);
  }
  auto gap = [&](double a) { return fl(a) + fl.left_slope(a) * (beta2 - a) - fb; };
  if (cand.size() < 2 || !(gap(cand.front()) <= 0.0) || !(gap(cand.back()) > 0.0)) {
    throw Error(ErrorCode::NoRootInInterval, "tangent gap does not change sign on the interval");
  }
  std::size_t a = 0;
  std::size_t b = cand.size() - 1;
  while (b - a > 1) {
    std::size_t mid = a + (b - a) / 2;
    if (gap(cand[mid]) <= 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return cand[a];
}

double compute_alpha0(const Flux& fl, double beta2, double C) {
  return compute_alpha0(fl, beta2, fl.lo(), C);
}

SlopeRange chord_slope_extrema(const Flux& fl, const StateRange& P, const StateRange& Q) {
  SlopeRange out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  std::vector<double> lp = lattice(fl, P);
  std::vector<double> lq = lattice(fl, Q);
  for (double p : lp) {
    double fp = fl(p);
    for (double q : lq) {
      if (p == q) continue;
      double s = (fp - fl(q)) / (p - q);
      out.min = std::min(out.min, s);
      out.max = std::max(out.max, s);
    }
  }
  return out;
}

SpeedBound analytic_T0_bound(const Flux& fl, const StateRange& left_range,
                             const StateRange& right_range, const StateRange& data_range,
                             double A, double B) {
  SpeedBound out;
  out.s_left = chord_slope_extrema(fl, left_range, data_range).min;
  out.s_right = chord_slope_extrema(fl, data_range, right_range).max;
  if (out.s_left > out.s_right && std::isfinite(out.s_left) && std::isfinite(out.s_right)) {
    out.T_tilde = std::abs(B - A) / (out.s_left - out.s_right);
  }
  return out;
}

Orientation orientation(const HypothesisParams& hp, VerdictKind kind) {
  StateRange alpha{hp.alpha1, hp.alpha2};
  StateRange beta{hp.beta2, hp.beta1};
  if (kind == VerdictKind::SatisfiedII1) return {alpha, beta};
  return {beta, alpha};
}

Orientation emergence_ranges(const HypothesisParams& hp, VerdictKind kind, const ShockData& data) {
  if (kind == VerdictKind::Violated) return {data.minus_range, data.plus_range};
  return orientation(hp, kind);
}

std::optional<Contraction> contraction_factor(const Flux& fl, const HypothesisParams& hp) {
  double e_min = (hp.beta1 - hp.beta2) + (hp.alpha2 - hp.alpha1);
  double e_max = std::min(hp.C - hp.alpha1, hp.beta1 - hp.D);
  if (!(e_max > e_min) || !(hp.beta2 > hp.alpha2)) return std::nullopt;
  double tol = strictness_tolerance(fl);
  constexpr int kScan = 256;
  for (int k = kScan - 1; k >= 1; --k) {
    double eps = e_min + (e_max - e_min) * k / kScan;
    double a = hp.alpha1 + eps;
    double b = hp.beta1 - eps;
    bool ok = true;
    for (double th : theta_grid(fl, hp.C, hp.D)) {
      if (!(eval_chord(fl, a, b, th) - fl(th) > tol)) {
        ok = false;
        break;
      }
    }
    if (ok) return Contraction{eps, (hp.beta1 - hp.alpha1 - eps) / (hp.beta2 - hp.alpha2)};
  }
  return std::nullopt;
}

Certificate certify(const Flux& fl, const HypothesisParams& hp, const ShockData& data,
                    double t_max, bool force) {
  Certificate cert;
  cert.verdict = check_main_conditions(fl, hp);
  if (cert.verdict.kind == VerdictKind::Violated && !force) {
    throw Error(ErrorCode::ConditionsViolated,
                "main conditions fail (" + std::to_string(cert.verdict.witnesses.size()) +
                    " witnesses)");
  }
  Orientation o = emergence_ranges(hp, cert.verdict.kind, data);
  SimState s = init_state(fl, data.u0);
  cert.report = run_until_single_front(s, o.left, o.right, t_max);
  cert.bound = analytic_T0_bound(fl, o.left, o.right, data.data_range, data.A, data.B);
  cert.report.T_tilde = cert.bound.T_tilde;
  double width = std::abs(data.B - data.A);
  if (cert.report.emerged && width > 0.0) cert.report.gamma = cert.report.T0 / width;
  if (cert.report.emerged && cert.bound.T_tilde) {
    cert.bound_respected = cert.report.T0 <= *cert.bound.T_tilde + 1e-12 * (1.0 + *cert.bound.T_tilde);
  }
  if (cert.verdict.kind == VerdictKind::SatisfiedI || cert.verdict.kind == VerdictKind::SatisfiedII2) {
    cert.contraction = contraction_factor(fl, hp);
  }
  return cert;
}

}  // namespace shocklab
