#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shocklab/flux.hpp"
#include "shocklab/front_tracking.hpp"
#include "shocklab/step_function.hpp"

namespace shocklab {

// alpha1 <= alpha2 < C <= D < beta2 <= beta1.
struct HypothesisParams {
  double alpha1;
  double alpha2;
  double C;
  double D;
  double beta2;
  double beta1;

  bool operator==(const HypothesisParams&) const = default;
};

struct Witness {
  std::string condition;
  double theta;
  double lhs;
  double rhs;
  bool at_boundary;  // equality within tolerance rather than a strict failure
};

struct HypothesisReport {
  bool passed = true;
  TripletKind triplet;
  std::vector<Witness> failures;
};

enum class VerdictKind { SatisfiedI, SatisfiedII1, SatisfiedII2, Violated };

std::string to_string(VerdictKind kind);

struct ConditionVerdict {
  VerdictKind kind = VerdictKind::Violated;
  TripletType triplet = TripletType::Neither;
  std::vector<Witness> witnesses;
  double margin = 0.0;          // smallest strict margin of the satisfied branch
  double tangent_margin = 0.0;  // L_{a1}(b2) - f(b2) or f(a2) - L_{b1}(a2) when relevant
};

// Relative slack used to decide strict inequalities: 1e-10 * (1 + max |f|).
double strictness_tolerance(const Flux& fl);

HypothesisReport check_hypothesis_H(const Flux& fl, const HypothesisParams& hp);

ConditionVerdict check_main_conditions(const Flux& fl, const HypothesisParams& hp);

// Breakpoint a0 on [lo, hi] where the tangent from a0 passes through (beta2, f(beta2)):
// the largest breakpoint whose tangent gap f(a) + f'(a-)(beta2 - a) - f(beta2) is <= 0.
double compute_alpha0(const Flux& fl, double beta2, double lo, double hi);
double compute_alpha0(const Flux& fl, double beta2, double C);

// Extreme chord slopes (f(p) - f(q)) / (p - q) over p in P, q in Q, p != q.
struct SlopeRange {
  double min;
  double max;
};

SlopeRange chord_slope_extrema(const Flux& fl, const StateRange& P, const StateRange& Q);

struct SpeedBound {
  double s_left;   // min chord slope from the left range into the data range
  double s_right;  // max chord slope from the data range into the right range
  std::optional<double> T_tilde;
};

SpeedBound analytic_T0_bound(const Flux& fl, const StateRange& left_range,
                             const StateRange& right_range, const StateRange& data_range,
                             double A, double B);

struct Orientation {
  StateRange left;
  StateRange right;
};

// Which envelope sits left of the shock: the beta range for I and II.2, the alpha range for II.1.
Orientation orientation(const HypothesisParams& hp, VerdictKind kind);


struct Contraction {
  double eps;
  double delta;
};

// Largest admissible eps from a scan, with delta = (beta1 - alpha1 - eps) / (beta2 - alpha2).
std::optional<Contraction> contraction_factor(const Flux& fl, const HypothesisParams& hp);

struct ShockData {
  double A;
  double B;
  StepFunction u0;
  StateRange data_range;
  StateRange minus_range;  // hull of the values of u- (left of A)
  StateRange plus_range;   // hull of the values of u+ (right of B)
};

// Envelopes for a satisfied verdict, the data hulls otherwise.
Orientation emergence_ranges(const HypothesisParams& hp, VerdictKind kind, const ShockData& data);

struct Certificate {
  ConditionVerdict verdict;
  EmergenceReport report;
  SpeedBound bound;
  std::optional<Contraction> contraction;
  bool bound_respected = true;
};

// Checks the conditions, then simulates to t_max and attaches the analytic bound.
// With force set, a Violated verdict is still simulated, using the hulls of the
// u- and u+ values as the ranges to separate.
Certificate certify(const Flux& fl, const HypothesisParams& hp, const ShockData& data,
                    double t_max, bool force = false);

}  // namespace shocklab
