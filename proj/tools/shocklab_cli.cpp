// Command-line front end: solve scenarios, query the Riemann solver, duals,
// Lax-Oleinik minimizers and characteristic curves, check and certify.
#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "shocklab/characteristics.hpp"
#include "shocklab/error.hpp"
#include "shocklab/io.hpp"
#include "shocklab/lax_oleinik.hpp"
#include "shocklab/legendre.hpp"
#include "shocklab/riemann.hpp"
#include "shocklab/scenario.hpp"
#include "shocklab/single_shock.hpp"

using namespace shocklab;

namespace {

constexpr int kConfigError = 2;
constexpr int kViolated = 3;
constexpr int kNotEmerged = 4;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ValidationError, "bad number '" + item + "' in list");
    }
  }
  return out;
}

struct ScenarioArgs {
  std::string scenario;
  std::string preset;
  std::string out;
  std::string times;
};

void add_scenario_flags(CLI::App* cmd, ScenarioArgs& a) {
  cmd->add_option("--scenario", a.scenario, "Scenario JSON file");
  cmd->add_option("--preset", a.preset, "Built-in scenario name");
  cmd->add_option("--out", a.out, "Output directory");
  cmd->add_option("--t", a.times, "Comma-separated snapshot times");
}

Scenario resolve(const ScenarioArgs& a) {
  if (a.scenario.empty() == a.preset.empty()) {
    throw Error(ErrorCode::ValidationError, "give exactly one of --scenario or --preset");
  }
  Scenario s = a.preset.empty() ? load_scenario(a.scenario) : preset(a.preset);
  if (!a.times.empty()) s.run.snapshots = parse_list(a.times);
  return s;
}

std::string output_dir(const ScenarioArgs& a, const Scenario& s) {
  if (!a.out.empty()) return a.out;
  if (!s.run.output.empty()) return s.run.output;
  return (std::filesystem::path("out") / (s.name.empty() ? "scenario" : s.name)).string();
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::IoError:
    case ErrorCode::HypothesisNotChecked:
    case ErrorCode::NotATriplet:
      return kConfigError;
    case ErrorCode::ConditionsViolated:
      return kViolated;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Front tracking and Lax-Oleinik laboratory for scalar conservation laws"};
  app.require_subcommand(1);

  ScenarioArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Run a scenario and write profiles, events and report");
  add_scenario_flags(solve, solve_args);

  std::string flux_path, data_path;
  double left = 0.0, right = 0.0;
  auto* riemann = app.add_subcommand("riemann", "Solve one Riemann problem");
  riemann->add_option("--flux", flux_path, "Flux JSON")->required();
  riemann->add_option("--left", left, "Left state")->required();
  riemann->add_option("--right", right, "Right state")->required();

  auto* dual = app.add_subcommand("dual", "Convex conjugate of a convex flux");
  dual->add_option("--flux", flux_path, "Flux JSON")->required();

  std::string xs_text, ts_text;
  auto* lax = app.add_subcommand("laxoleinik", "Value function and extreme minimizers");
  lax->add_option("--flux", flux_path, "Flux JSON")->required();
  lax->add_option("--data", data_path, "Step data JSON")->required();
  lax->add_option("--x", xs_text, "Comma-separated positions")->required();
  lax->add_option("--t", ts_text, "Comma-separated times")->required();

  double alpha = 0.0;
  std::string side = "plus";
  auto* rcurve = app.add_subcommand("rcurve", "Generalized forward characteristic from alpha");
  rcurve->add_option("--flux", flux_path, "Flux JSON")->required();
  rcurve->add_option("--data", data_path, "Step data JSON")->required();
  rcurve->add_option("--alpha", alpha, "Anchor point");
  rcurve->add_option("--side", side, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  rcurve->add_option("--t", ts_text, "Comma-separated times")->required();

  ScenarioArgs check_args;
  auto* check = app.add_subcommand("check", "Evaluate the single-shock conditions");
  add_scenario_flags(check, check_args);

  ScenarioArgs cert_args;
  bool force = false;
  auto* certify_cmd = app.add_subcommand("certify", "Check conditions, then simulate emergence");
  add_scenario_flags(certify_cmd, cert_args);
  certify_cmd->add_flag("--force", force, "Simulate even when the conditions fail");

  std::string batch_dir, batch_out = "out";
  int jobs = 1;
  auto* batch = app.add_subcommand("batch", "Run every scenario file in a directory");
  batch->add_option("dir", batch_dir, "Directory of scenario JSON files")->required();
  batch->add_option("--out", batch_out, "Output root");
  batch->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*solve) {
      Scenario s = resolve(solve_args);
      std::string dir = output_dir(solve_args, s);
      RunResult r = run_scenario(s, dir);
      std::cout << r.report.at("verdict").get<std::string>() << " -> " << dir << "\n";
      return r.exit_code;
    }
    if (*riemann) {
      Flux fl = flux_from_json(read_json_file(flux_path));
      for (const WaveFront& w : solve_riemann(fl, left, right).fronts) {
        std::cout << Json{{"speed", w.speed}, {"left", w.left}, {"right", w.right}}.dump() << "\n";
      }
      return 0;
    }
    if (*dual) {
      Flux fl = flux_from_json(read_json_file(flux_path));
      std::cout << to_json(legendre_dual(fl)).dump() << "\n";
      return 0;
    }
    if (*lax) {
      Flux fl = flux_from_json(read_json_file(flux_path));
      LaxOleinik lo(fl, step_from_json(read_json_file(data_path), "data"));
      for (double t : parse_list(ts_text)) {
        for (double x : parse_list(xs_text)) {
          Json j = to_json(lo.value(x, t));
          PointValue pv = lo.solve(x, t);
          j["u"] = pv.value;
          j["at_shock"] = pv.at_shock;
          if (pv.at_shock) j["one_sided"] = {pv.left, pv.right};
          std::cout << j.dump() << "\n";
        }
      }
      return 0;
    }
    if (*rcurve) {
      Flux fl = flux_from_json(read_json_file(flux_path));
      CharCurve c = r_curve(fl, step_from_json(read_json_file(data_path), "data"), alpha,
                            side == "plus" ? CurveSide::Plus : CurveSide::Minus, parse_list(ts_text));
      std::cout << "t,R\n";
      for (std::size_t i = 0; i < c.times.size(); ++i) {
        std::cout << format_number(c.times[i]) << ',' << format_number(c.positions[i]) << "\n";
      }
      return 0;
    }
    if (*check) {
      Scenario s = resolve(check_args);
      if (!s.hypothesis) throw Error(ErrorCode::ValidationError, "hypothesis: missing");
      Flux fl = build_flux(s);
      HypothesisReport h = check_hypothesis_H(fl, *s.hypothesis);
      if (!h.passed) {
        Json out{{"kind", "HypothesisFailed"}, {"witnesses", Json::array()}};
        for (const auto& w : h.failures) out["witnesses"].push_back(to_json(w));
        std::cout << out.dump(2) << "\n";
        return kViolated;
      }
      ConditionVerdict v = check_main_conditions(fl, *s.hypothesis);
      std::cout << to_json(v).dump(2) << "\n";
      return v.kind == VerdictKind::Violated ? kViolated : 0;
    }
    if (*certify_cmd) {
      Scenario s = resolve(cert_args);
      if (!s.hypothesis) throw Error(ErrorCode::ValidationError, "hypothesis: missing");
      Flux fl = build_flux(s);
      ConditionVerdict v = check_main_conditions(fl, *s.hypothesis);
      if (v.kind == VerdictKind::Violated && !force) {
        std::cout << to_json(v).dump(2) << "\n";
        return kViolated;
      }
      std::string dir = output_dir(cert_args, s);
      RunResult r = run_scenario(s, dir);
      std::cout << r.report.at("verdict").get<std::string>() << " (" << to_string(v.kind) << ") -> "
                << dir << "\n";
      return r.exit_code == 0 ? 0 : kNotEmerged;
    }
    if (*batch) {
      int worst = 0;
      for (const BatchItem& item : run_batch(batch_dir, batch_out, jobs)) {
        std::cout << item.file << '\t' << item.exit_code << '\t' << item.message << "\n";
        if (item.exit_code == kConfigError || item.exit_code == 1) worst = std::max(worst, item.exit_code);
      }
      return worst;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  }
  return 0;
}
