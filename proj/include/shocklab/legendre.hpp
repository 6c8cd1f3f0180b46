#pragma once

#include <vector>

#include "shocklab/flux.hpp"

namespace shocklab {

// Convex conjugate f*(p) = sup_q {pq - f(q)} of a convex piecewise-affine flux,
// defined on the slope range [m_0, m_{n-1}] of the primal.
class DualFlux {
 public:
  DualFlux(std::vector<double> breakpoints, std::vector<double> values,
           std::vector<double> maximizers, std::vector<double> maximizer_values,
           double primal_lo, double primal_hi);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  // maximizers()[j] is the primal breakpoint attaining the sup on (p_j, p_{j+1}).
  const std::vector<double>& maximizers() const { return maximizers_; }
  double lo() const { return breakpoints_.front(); }
  double hi() const { return breakpoints_.back(); }
  bool contains(double p) const { return p >= lo() && p <= hi(); }

  double operator()(double p) const;
  // Ends of the subdifferential at p, i.e. the primal maximizer interval.
  double left_slope(double p) const;
  double right_slope(double p) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<double> maximizers_;
  std::vector<double> maximizer_values_;
  double primal_lo_;
  double primal_hi_;
};

DualFlux legendre_dual(const Flux& fl);

// Conjugate of the conjugate, evaluated at the primal breakpoints.
Flux bidual(const Flux& fl);

}  // namespace shocklab
