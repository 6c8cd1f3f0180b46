#pragma once

#include <vector>

namespace shocklab {

// Piecewise-constant function on the real line: values[0] on (-inf, jumps[0]),
// values[i] on [jumps[i-1], jumps[i]), values.back() on [jumps.back(), inf).
// Adjacent values are kept distinct.
class StepFunction {
 public:
  StepFunction() : values_{0.0} {}
  explicit StepFunction(double constant) : values_{constant} {}
  // Requires strictly increasing jumps and values.size() == jumps.size() + 1.
  StepFunction(std::vector<double> jumps, std::vector<double> values);

  // Like the constructor, but tolerates repeated positions (the last piece wins
  // over zero-width intervals) and positions that fall behind by round-off.
  static StepFunction from_pieces(std::vector<double> jumps, std::vector<double> values);

  const std::vector<double>& jumps() const { return jumps_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t pieces() const { return values_.size(); }

  double operator()(double x) const;
  double left_limit(double x) const;
  double integral(double a, double b) const;
  double total_variation() const;
  double min() const;
  double max() const;

  bool operator==(const StepFunction&) const = default;

 private:
  std::vector<double> jumps_;
  std::vector<double> values_;
};

// Exact integral of |u - v| over [a, b].
double l1_distance(const StepFunction& u, const StepFunction& v, double a, double b);

}  // namespace shocklab
