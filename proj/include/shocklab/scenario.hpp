#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "shocklab/flux.hpp"
#include "shocklab/io.hpp"
#include "shocklab/single_shock.hpp"
#include "shocklab/step_function.hpp"

namespace shocklab {

// k i.i.d. uniform values on [lo, hi] placed on k equal pieces of (A, B).
struct RandomSteps {
  int steps = 1;
  double lo = 0.0;
  double hi = 1.0;
  std::uint64_t seed = 0;

  bool operator==(const RandomSteps&) const = default;
};

using FluxSource = std::variant<AnalyticFluxSpec, Flux>;
using UbarSource = std::variant<StepFunction, RandomSteps>;

struct ScenarioData {
  double A = 0.0;
  double B = 1.0;
  StepFunction u_minus;
  StepFunction u_plus;
  UbarSource ubar;

  bool operator==(const ScenarioData&) const = default;
};

struct RunConfig {
  std::optional<double> t_max;  // default 100 |A - B|
  std::vector<double> snapshots;
  std::string output;

  bool operator==(const RunConfig&) const = default;
};

struct Scenario {
  std::string name;
  FluxSource flux;
  ScenarioData data;
  std::optional<HypothesisParams> hypothesis;
  RunConfig run;

  bool operator==(const Scenario&) const = default;
};

// Uniform double in [0, 1) from the top 53 bits of a 64-bit Mersenne twister draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t bits() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

Scenario parse_scenario(const Json& j);
Json emit_scenario(const Scenario& s);
// Reads a scenario file; a preset name is accepted when no such file exists.
Scenario load_scenario(const std::string& path);

std::vector<std::string> preset_names();
Scenario preset(const std::string& name);

StepFunction expand_ubar(const ScenarioData& d);
StepFunction initial_data(const ScenarioData& d);
// Analytic specs gain the data values and hypothesis parameters as corners.
Flux build_flux(const Scenario& s);
double horizon(const Scenario& s);
ShockData shock_data(const Scenario& s);

struct RunResult {
  Json report;
  int exit_code;  // 0 emerged, 4 not emerged
};

// Simulates and writes profiles, events, trajectories and report.json into out_dir.
RunResult run_scenario(const Scenario& s, const std::string& out_dir);

struct BatchItem {
  std::string file;
  int exit_code;
  std::string message;
};

std::vector<BatchItem> run_batch(const std::string& dir, const std::string& out_root, int jobs);

}  // namespace shocklab
