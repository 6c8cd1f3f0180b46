#include "shocklab/flux.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shocklab/error.hpp"

namespace shocklab {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_state(const Flux& fl, double u) {
  if (!fl.contains(u)) {
    throw Error(ErrorCode::StateOutOfRange,
                "state " + num(u) + " outside [" + num(fl.lo()) + ", " + num(fl.hi()) + "]");
  }
}

}  // namespace

Flux::Flux(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size()) {
    throw Error(ErrorCode::LengthMismatch, "breakpoints and values differ in length");
  }
  if (breakpoints_.size() < 2) {
    throw Error(ErrorCode::LengthMismatch, "a flux needs at least two breakpoints");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i]) || !std::isfinite(values_[i])) {
      throw Error(ErrorCode::NonMonotoneBreakpoints, "non-finite breakpoint or value");
    }
    if (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1])) {
      throw Error(ErrorCode::NonMonotoneBreakpoints,
                  "breakpoint " + num(breakpoints_[i]) + " does not exceed " +
                      num(breakpoints_[i - 1]));
    }
  }
  slopes_.resize(breakpoints_.size() - 1);
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    slopes_[i] = (values_[i + 1] - values_[i]) / (breakpoints_[i + 1] - breakpoints_[i]);
    if (!std::isfinite(slopes_[i])) {
      throw Error(ErrorCode::NonMonotoneBreakpoints, "segment slope is not finite");
    }
  }
}

std::size_t Flux::segment(double u) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), u);
  std::size_t i = it == breakpoints_.begin() ? 0 : static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return std::min(i, slopes_.size() - 1);
}

double Flux::operator()(double u) const {
  require_state(*this, u);
  std::size_t i = segment(u);
  if (u == breakpoints_[i]) return values_[i];
  if (u == breakpoints_[i + 1]) return values_[i + 1];
  return values_[i] + slopes_[i] * (u - breakpoints_[i]);
}

double Flux::left_slope(double u) const {
  require_state(*this, u);
  if (u == lo()) return slopes_.front();
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), u);
  return slopes_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double Flux::right_slope(double u) const {
  require_state(*this, u);
  return slopes_[segment(u)];
}

bool Flux::is_convex(double tol) const {
  for (std::size_t i = 1; i < slopes_.size(); ++i) {
    if (slopes_[i] < slopes_[i - 1] - tol) return false;
  }
  return true;
}

bool Flux::is_concave(double tol) const {
  for (std::size_t i = 1; i < slopes_.size(); ++i) {
    if (slopes_[i] > slopes_[i - 1] + tol) return false;
  }
  return true;
}

Flux make_flux(std::vector<double> breakpoints, std::vector<double> values) {
  return Flux(std::move(breakpoints), std::move(values));
}

std::string to_string(FluxKind kind) {
  switch (kind) {
    case FluxKind::Burgers: return "burgers";
    case FluxKind::NegCubic: return "neg_cubic";
    case FluxKind::DoubleWell: return "double_well";
    case FluxKind::BuckleyLeverett: return "buckley_leverett";
    case FluxKind::Table: return "table";
  }
  return "table";
}

FluxKind flux_kind_from_string(const std::string& name) {
  if (name == "burgers") return FluxKind::Burgers;
  if (name == "neg_cubic") return FluxKind::NegCubic;
  if (name == "double_well") return FluxKind::DoubleWell;
  if (name == "buckley_leverett") return FluxKind::BuckleyLeverett;
  if (name == "table") return FluxKind::Table;
  throw Error(ErrorCode::ValidationError, "unknown flux kind '" + name + "'");
}

double analytic_value(const AnalyticFluxSpec& spec, double u) {
  switch (spec.kind) {
    case FluxKind::Burgers: return 0.5 * u * u;
    case FluxKind::NegCubic: return -u * u * u;
    case FluxKind::DoubleWell: return 0.25 * u * u * u * u - u * u;
    case FluxKind::BuckleyLeverett: {
      double w = 1.0 - u;
      return u * u / (u * u + spec.r * w * w);
    }
    case FluxKind::Table: return make_flux(spec.table_x, spec.table_f)(u);
  }
  return 0.0;
}

double analytic_derivative(const AnalyticFluxSpec& spec, double u) {
  switch (spec.kind) {
    case FluxKind::Burgers: return u;
    case FluxKind::NegCubic: return -3.0 * u * u;
    case FluxKind::DoubleWell: return u * u * u - 2.0 * u;
    case FluxKind::BuckleyLeverett: {
      double w = 1.0 - u;
      double den = u * u + spec.r * w * w;
      double dden = 2.0 * u - 2.0 * spec.r * w;
      return (2.0 * u * den - u * u * dden) / (den * den);
    }
    case FluxKind::Table: return make_flux(spec.table_x, spec.table_f).left_slope(u);
  }
  return 0.0;
}

Flux approximate_pw_affine(const AnalyticFluxSpec& spec) {
  if (!(spec.mesh > 0.0) || !std::isfinite(spec.mesh) || !(spec.lo < spec.hi)) {
    throw Error(ErrorCode::EmptyMesh, "mesh must be positive on a nonempty interval");
  }
  if (spec.kind == FluxKind::Table && spec.table_x.size() < 2) {
    throw Error(ErrorCode::EmptyMesh, "table flux needs at least two samples");
  }
  struct Node {
    double x;
    bool requested;
  };
  std::vector<Node> nodes;
  auto add_requested = [&](double x) {
    if (x < spec.lo || x > spec.hi) {
      throw Error(ErrorCode::StateOutOfRange, "corner " + num(x) + " outside working interval");
    }
    nodes.push_back({x, true});
  };
  for (double e : spec.corners) add_requested(e);
  for (double p : spec.pins) add_requested(p);
  add_requested(spec.lo);
  add_requested(spec.hi);
  double n_steps = std::floor((spec.hi - spec.lo) / spec.mesh);
  if (n_steps > 5e7) throw Error(ErrorCode::EmptyMesh, "mesh too fine for working interval");
  for (long k = 1; k <= static_cast<long>(n_steps); ++k) {
    double x = spec.lo + static_cast<double>(k) * spec.mesh;
    if (x < spec.hi) nodes.push_back({x, false});
  }
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    return a.x < b.x || (a.x == b.x && a.requested && !b.requested);
  });
  // Grid nodes within a tiny distance of a requested corner give way to it.
  double merge_tol = 1e-9 * spec.mesh;
  std::vector<Node> kept;
  for (const Node& n : nodes) {
    if (!kept.empty() && n.x - kept.back().x <= merge_tol) {
      if (n.requested && !kept.back().requested) kept.back() = n;
      continue;
    }
    kept.push_back(n);
  }
  std::vector<double> xs, fs;
  xs.reserve(kept.size());
  fs.reserve(kept.size());
  for (const Node& n : kept) {
    xs.push_back(n.x);
    fs.push_back(analytic_value(spec, n.x));
  }
  for (double a : spec.pins) {
    auto it = std::lower_bound(xs.begin(), xs.end(), a - merge_tol);
    std::size_t i = static_cast<std::size_t>(it - xs.begin());
    if (i == 0) continue;
    fs[i - 1] = fs[i] - analytic_derivative(spec, xs[i]) * (xs[i] - xs[i - 1]);
  }
  return Flux(std::move(xs), std::move(fs));
}

double eval_chord(const Flux& fl, double a, double b, double theta) {
  if (a == b) throw Error(ErrorCode::DegenerateChord, "chord endpoints coincide at " + num(a));
  require_state(fl, theta);
  double fa = fl(a);
  double fb = fl(b);
  if (theta == a) return fa;
  if (theta == b) return fb;
  return fa + (fb - fa) / (b - a) * (theta - a);
}

double eval_tangent(const Flux& fl, double a, double theta) {
  require_state(fl, a);
  require_state(fl, theta);
  if (a == fl.lo() || a == fl.hi()) {
    throw Error(ErrorCode::BoundaryPoint, "tangent point " + num(a) + " is on the boundary");
  }
  double fa = fl(a);
  if (theta == a) return fa;
  return fa + fl.left_slope(a) * (theta - a);
}

std::string to_string(TripletType type) {
  switch (type) {
    case TripletType::ConvexConvex: return "ConvexConvex";
    case TripletType::ConvexConcave: return "ConvexConcave";
    case TripletType::Neither: return "Neither";
  }
  return "Neither";
}

TripletKind classify_triplet(const Flux& fl, double C, double D) {
  if (!(C <= D) || !fl.contains(C) || !fl.contains(D)) {
    throw Error(ErrorCode::COutOfRange,
                "need lo <= C <= D <= hi, got C=" + num(C) + ", D=" + num(D));
  }
  const auto& b = fl.breakpoints();
  const auto& m = fl.slopes();
  bool left_convex = true;
  bool right_convex = true;
  bool right_concave = true;
  // Segment i spans [b_i, b_{i+1}]; it meets (-inf, C) iff b_i < C and (D, inf) iff b_{i+1} > D.
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (b[i] < C && m[i] < m[i - 1] - kSlopeTol) left_convex = false;
    if (b[i] > D) {
      if (m[i] < m[i - 1] - kSlopeTol) right_convex = false;
      if (m[i] > m[i - 1] + kSlopeTol) right_concave = false;
    }
  }
  TripletKind out{TripletType::Neither, C, D};
  if (left_convex && right_convex) {
    out.type = TripletType::ConvexConvex;
  } else if (left_convex && right_concave) {
    out.type = TripletType::ConvexConcave;
  }
  return out;
}

ChordSlopes chord_slopes(const Flux& fl, double alpha, double beta) {
  if (alpha == beta) throw Error(ErrorCode::DegenerateChord, "chord endpoints coincide");
  double left = alpha == fl.lo() ? fl.right_slope(alpha) : fl.left_slope(alpha);
  double right = fl.left_slope(beta);
  return {left, (fl(beta) - fl(alpha)) / (beta - alpha), right};
}

bool chord_slope_check(const Flux& fl, double alpha, double beta, double C, double D) {
  if (classify_triplet(fl, C, D).type != TripletType::ConvexConvex) {
    throw Error(ErrorCode::WrongTriplet, "chord slope check needs a convex-convex triplet");
  }
  if (!(alpha < C && C <= D && D < beta)) return false;
  require_state(fl, alpha);
  require_state(fl, beta);
  return fl(C) < eval_chord(fl, alpha, beta, C) && fl(D) < eval_chord(fl, alpha, beta, D);
}

double ConvexModification::q(double x) const {
  double s = x - x1;
  return (b2 - b1) / (2.0 * (x2 - x1)) * s * s + b1 * s + a1;
}

double ConvexModification::q_prime(double x) const {
  return (b2 - b1) / (x2 - x1) * (x - x1) + b1;
}

ConvexModification convex_modify(const Flux& fl, double alpha, double beta) {
  if (!(alpha < beta)) throw Error(ErrorCode::EmptyInterval, "need alpha < beta");
  require_state(fl, alpha);
  require_state(fl, beta);
  ChordSlopes cs = chord_slopes(fl, alpha, beta);
  if (!(cs.left < cs.chord && cs.chord < cs.right)) {
    throw Error(ErrorCode::ChordSlopeViolated,
                "need f'(alpha-) < chord slope < f'(beta-), got " + num(cs.left) + ", " +
                    num(cs.chord) + ", " + num(cs.right));
  }
  double fa = fl(alpha);
  double fb = fl(beta);
  double b1 = cs.left;
  double b2 = cs.right;
  double d = (fa - alpha * b1 - fb + beta * b2) / (b2 - b1);
  // The blend is symmetric about d: x2 = 2d - x1 makes Q meet both tangents
  // with matching value and slope. Take x1 mid-way in its admissible range.
  double x1 = 0.5 * (std::max(alpha, 2.0 * d - beta) + d);
  double x2 = 2.0 * d - x1;
  double a1 = fa + b1 * (x1 - alpha);
  double a2 = fb + b2 * (x2 - beta);
  ConvexModification mod{Flux({0.0, 1.0}, {0.0, 0.0}), alpha, beta, b1, b2, d, x1, x2, a1, a2};

  std::vector<double> xs, fs;
  const auto& bp = fl.breakpoints();
  const auto& bv = fl.values();
  for (std::size_t i = 0; i < bp.size() && bp[i] < alpha; ++i) {
    xs.push_back(bp[i]);
    fs.push_back(bv[i]);
  }
  xs.push_back(alpha);
  fs.push_back(fa);
  if (x1 > alpha) {
    xs.push_back(x1);
    fs.push_back(a1);
  }
  double hq = (x2 - x1) / kQSamples;
  for (int k = 1; k < kQSamples; ++k) {
    double x = x1 + k * hq;
    xs.push_back(x);
    fs.push_back(mod.q(x));
  }
  xs.push_back(x2);
  fs.push_back(a2);
  if (beta > x2) {
    xs.push_back(beta);
    fs.push_back(fb);
  }
  for (std::size_t i = 0; i < bp.size(); ++i) {
    if (bp[i] > beta) {
      xs.push_back(bp[i]);
      fs.push_back(bv[i]);
    }
  }
  mod.flux = Flux(std::move(xs), std::move(fs));
  const auto& m = mod.flux.slopes();
  const auto& mb = mod.flux.breakpoints();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (mb[i] >= alpha && mb[i] <= beta && m[i] < m[i - 1] - kSlopeTol) {
      throw Error(ErrorCode::ChordSlopeViolated, "modified flux lost convexity near " + num(mb[i]));
    }
  }
  return mod;
}

Flux convex_modify_one_sided(const Flux& fl, double C, double h) {
  require_state(fl, C);
  if (!(h > 0.0)) throw Error(ErrorCode::EmptyMesh, "sampling step must be positive");
  if (C == fl.hi()) return fl;
  double fc = fl(C);
  double sc = C == fl.lo() ? fl.right_slope(C) : fl.left_slope(C);
  auto g = [&](double p) {
    double s = p - C;
    return s * s + sc * s + fc;
  };
  std::vector<double> xs, fs;
  const auto& bp = fl.breakpoints();
  const auto& bv = fl.values();
  for (std::size_t i = 0; i < bp.size() && bp[i] < C; ++i) {
    xs.push_back(bp[i]);
    fs.push_back(bv[i]);
  }
  xs.push_back(C);
  fs.push_back(fc);
  std::vector<double> right;
  for (double x : bp) {
    if (x > C) right.push_back(x);
  }
  double prev = C;
  for (double x : right) {
    double gap = x - prev;
    int pieces = static_cast<int>(std::ceil(gap / h - 1e-12));
    for (int k = 1; k < pieces; ++k) {
      double y = prev + gap * k / pieces;
      xs.push_back(y);
      fs.push_back(g(y));
    }
    xs.push_back(x);
    fs.push_back(g(x));
    prev = x;
  }
  return Flux(std::move(xs), std::move(fs));
}

Flux hull(const Flux& fl, double a, double b, HullSide side) {
  if (!(a < b)) throw Error(ErrorCode::EmptyInterval, "hull needs a < b");
  require_state(fl, a);
  require_state(fl, b);
  std::vector<double> px, py;
  auto slope = [&](std::size_t i, double x, double y) { return (y - py[i]) / (x - px[i]); };
  auto push = [&](double x, double y) {
    while (px.size() >= 2) {
      std::size_t n = px.size();
      double s_prev = (py[n - 1] - py[n - 2]) / (px[n - 1] - px[n - 2]);
      double s_next = slope(n - 1, x, y);
      bool pop = side == HullSide::Lower ? s_prev >= s_next : s_prev <= s_next;
      if (!pop) break;
      px.pop_back();
      py.pop_back();
    }
    px.push_back(x);
    py.push_back(y);
  };
  push(a, fl(a));
  const auto& bp = fl.breakpoints();
  const auto& bv = fl.values();
  for (auto it = std::upper_bound(bp.begin(), bp.end(), a); it != bp.end() && *it < b; ++it) {
    push(*it, bv[static_cast<std::size_t>(it - bp.begin())]);
  }
  push(b, fl(b));
  return Flux(std::move(px), std::move(py));
}

}  // namespace shocklab
