#include "shocklab/step_function.hpp"

#include <algorithm>
#include <cmath>

#include "shocklab/error.hpp"

namespace shocklab {

StepFunction::StepFunction(std::vector<double> jumps, std::vector<double> values) {
  if (values.size() != jumps.size() + 1) {
    throw Error(ErrorCode::LengthMismatch, "step function needs one more value than jumps");
  }
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (!std::isfinite(jumps[i]) || (i > 0 && !(jumps[i] > jumps[i - 1]))) {
      throw Error(ErrorCode::NonMonotoneBreakpoints, "jump positions must increase strictly");
    }
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::ValidationError, "non-finite step value");
  }
  values_.push_back(values[0]);
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (values[i + 1] == values_.back()) continue;
    jumps_.push_back(jumps[i]);
    values_.push_back(values[i + 1]);
  }
}

StepFunction StepFunction::from_pieces(std::vector<double> jumps, std::vector<double> values) {
  if (values.size() != jumps.size() + 1) {
    throw Error(ErrorCode::LengthMismatch, "step function needs one more value than jumps");
  }
  std::vector<double> js, vs{values[0]};
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    double x = jumps[i];
    if (!js.empty() && x <= js.back()) {
      // Zero-width piece: the newer value replaces the old one at the same position.
      vs.back() = values[i + 1];
      if (vs.size() >= 2 && vs.back() == vs[vs.size() - 2]) {
        vs.pop_back();
        js.pop_back();
      }
      continue;
    }
    if (values[i + 1] == vs.back()) continue;
    js.push_back(x);
    vs.push_back(values[i + 1]);
  }
  return StepFunction(std::move(js), std::move(vs));
}

double StepFunction::operator()(double x) const {
  auto it = std::upper_bound(jumps_.begin(), jumps_.end(), x);
  return values_[static_cast<std::size_t>(it - jumps_.begin())];
}

double StepFunction::left_limit(double x) const {
  auto it = std::lower_bound(jumps_.begin(), jumps_.end(), x);
  return values_[static_cast<std::size_t>(it - jumps_.begin())];
}

double StepFunction::integral(double a, double b) const {
  if (a == b) return 0.0;
  if (a > b) return -integral(b, a);
  double total = 0.0;
  double x = a;
  auto it = std::upper_bound(jumps_.begin(), jumps_.end(), a);
  std::size_t i = static_cast<std::size_t>(it - jumps_.begin());
  while (i < jumps_.size() && jumps_[i] < b) {
    total += values_[i] * (jumps_[i] - x);
    x = jumps_[i];
    ++i;
  }
  total += values_[i] * (b - x);
  return total;
}

double StepFunction::total_variation() const {
  double tv = 0.0;
  for (std::size_t i = 1; i < values_.size(); ++i) tv += std::abs(values_[i] - values_[i - 1]);
  return tv;
}

double StepFunction::min() const { return *std::min_element(values_.begin(), values_.end()); }
double StepFunction::max() const { return *std::max_element(values_.begin(), values_.end()); }

double l1_distance(const StepFunction& u, const StepFunction& v, double a, double b) {
  if (!(a < b)) return 0.0;
  std::vector<double> cuts{a, b};
  for (double x : u.jumps()) {
    if (x > a && x < b) cuts.push_back(x);
  }
  for (double x : v.jumps()) {
    if (x > a && x < b) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double w = cuts[i + 1] - cuts[i];
    if (w <= 0.0) continue;
    double mid = cuts[i] + 0.5 * w;
    total += std::abs(u(mid) - v(mid)) * w;
  }
  return total;
}

}  // namespace shocklab
