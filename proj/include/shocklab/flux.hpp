#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace shocklab {

// Piecewise-affine flux on a working interval [b_0, b_n], stored by its
// breakpoints and nodal values. Evaluation outside the interval throws.
class Flux {
 public:
  Flux(std::vector<double> breakpoints, std::vector<double> values);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& slopes() const { return slopes_; }
  std::size_t size() const { return breakpoints_.size(); }
  double lo() const { return breakpoints_.front(); }
  double hi() const { return breakpoints_.back(); }
  bool contains(double u) const { return u >= lo() && u <= hi(); }

  double operator()(double u) const;
  // Slope of the segment ending at u (first segment at u = lo).
  double left_slope(double u) const;
  // Slope of the segment starting at u (last segment at u = hi).
  double right_slope(double u) const;
  // Index of the segment containing u; breakpoints belong to the segment on their right.
  std::size_t segment(double u) const;

  bool is_convex(double tol = 0.0) const;
  bool is_concave(double tol = 0.0) const;

  bool operator==(const Flux& other) const {
    return breakpoints_ == other.breakpoints_ && values_ == other.values_;
  }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<double> slopes_;
};

Flux make_flux(std::vector<double> breakpoints, std::vector<double> values);

enum class FluxKind { Burgers, NegCubic, DoubleWell, BuckleyLeverett, Table };

std::string to_string(FluxKind kind);
FluxKind flux_kind_from_string(const std::string& name);

struct AnalyticFluxSpec {
  FluxKind kind = FluxKind::Burgers;
  double lo = -1.0;
  double hi = 1.0;
  double mesh = 0.1;
  std::vector<double> corners;
  // Nodes a whose left slope is pinned to the analytic derivative f'(a).
  std::vector<double> pins;
  double r = 1.0;  // Buckley-Leverett mobility ratio
  std::vector<double> table_x;
  std::vector<double> table_f;

  bool operator==(const AnalyticFluxSpec&) const = default;
};

double analytic_value(const AnalyticFluxSpec& spec, double u);
double analytic_derivative(const AnalyticFluxSpec& spec, double u);

Flux approximate_pw_affine(const AnalyticFluxSpec& spec);

double eval_chord(const Flux& fl, double a, double b, double theta);
double eval_tangent(const Flux& fl, double a, double theta);

enum class TripletType { ConvexConvex, ConvexConcave, Neither };

std::string to_string(TripletType type);

struct TripletKind {
  TripletType type = TripletType::Neither;
  double C = 0.0;
  double D = 0.0;
};

inline constexpr double kSlopeTol = 1e-12;

TripletKind classify_triplet(const Flux& fl, double C, double D);

struct ChordSlopes {
  double left;   // f'(alpha-)
  double chord;  // (f(beta) - f(alpha)) / (beta - alpha)
  double right;  // f'(beta-)
};

ChordSlopes chord_slopes(const Flux& fl, double alpha, double beta);

// True iff alpha < C <= D < beta and f(C), f(D) lie strictly below the chord
// over [alpha, beta]. Requires a convex-convex triplet at (C, D).
bool chord_slope_check(const Flux& fl, double alpha, double beta, double C, double D);

struct ConvexModification {
  Flux flux;
  double alpha, beta;
  double b1, b2;  // tangent slopes at alpha and beta (left slopes)
  double d;       // abscissa where the two tangents meet
  double x1, x2;  // quadratic blend interval
  double a1, a2;  // tangent values at x1 and x2

  double q(double x) const;
  double q_prime(double x) const;
};

inline constexpr int kQSamples = 16;

ConvexModification convex_modify(const Flux& fl, double alpha, double beta);

// f for p <= C, (p-C)^2 + f'(C-)(p-C) + f(C) for p > C, sampled on the
// flux breakpoints right of C refined to at most `h` spacing.
Flux convex_modify_one_sided(const Flux& fl, double C, double h);

enum class HullSide { Lower, Upper };

Flux hull(const Flux& fl, double a, double b, HullSide side);

}  // namespace shocklab
