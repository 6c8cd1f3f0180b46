#include "shocklab/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <thread>

#include "shocklab/error.hpp"
#include "shocklab/front_tracking.hpp"

namespace shocklab {

namespace fs = std::filesystem;

namespace {

double number_at(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw Error(ErrorCode::ValidationError, where + "." + key + ": expected a number");
  }
  return j.at(key).get<double>();
}

StateRange hull_of(const StepFunction& u) { return {u.min(), u.max()}; }

void collect_values(const StepFunction& u, std::vector<double>& out) {
  out.insert(out.end(), u.values().begin(), u.values().end());
}


std::string profile_csv(const StepFunction& u) {
  std::ostringstream os;
  os << "x_left,x_right,value\n";
  const auto& js = u.jumps();
  const auto& vs = u.values();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    os << (i == 0 ? std::string() : format_number(js[i - 1])) << ','
       << (i == js.size() ? std::string() : format_number(js[i])) << ',' << format_number(vs[i])
       << '\n';
  }
  return os.str();
}

std::string trajectories_csv(const SimState& s) {
  std::ostringstream os;
  os << "id,t,x,left,right,speed,event\n";
  for (const FrontRecord& r : s.history()) {
    auto row = [&](double t, double x, const char* what) {
      os << r.id << ',' << format_number(t) << ',' << format_number(x) << ','
         << format_number(r.left) << ',' << format_number(r.right) << ','
         << format_number(r.speed) << ',' << what << '\n';
    };
    row(r.t_birth, r.x_birth, "birth");
    if (r.t_death) {
      row(*r.t_death, *r.x_death, "death");
    } else {
      row(s.time(), r.x_birth + r.speed * (s.time() - r.t_birth), "end");
    }
  }
  return os.str();
}

Scenario base(const std::string& name, AnalyticFluxSpec spec, double u_minus, UbarSource ubar,
              double u_plus, HypothesisParams hp, double t_max) {
  Scenario s;
  s.name = name;
  s.flux = std::move(spec);
  s.data.A = 0.0;
  s.data.B = 1.0;
  s.data.u_minus = StepFunction(u_minus);
  s.data.u_plus = StepFunction(u_plus);
  s.data.ubar = std::move(ubar);
  s.hypothesis = hp;
  s.run.t_max = t_max;
  s.run.snapshots = {0.0, 0.25 * t_max, 0.5 * t_max, t_max};
  return s;
}

AnalyticFluxSpec analytic(FluxKind kind, double lo, double hi, double mesh,
                          std::vector<double> corners = {}) {
  AnalyticFluxSpec spec;
  spec.kind = kind;
  spec.lo = lo;
  spec.hi = hi;
  spec.mesh = mesh;
  spec.corners = std::move(corners);
  return spec;
}

}  // namespace

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ValidationError, "scenario: expected an object");
  Scenario s;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw Error(ErrorCode::ValidationError, "name: expected a string");
    s.name = j.at("name").get<std::string>();
  }
  if (!j.contains("flux")) throw Error(ErrorCode::ValidationError, "flux: missing");
  const Json& jf = j.at("flux");
  if (jf.is_object() && jf.contains("kind")) {
    s.flux = analytic_spec_from_json(jf, "flux");
  } else {
    s.flux = flux_from_json(jf, "flux");
  }
  if (!j.contains("data")) throw Error(ErrorCode::ValidationError, "data: missing");
  const Json& jd = j.at("data");
  s.data.A = number_at(jd, "A", "data");
  s.data.B = number_at(jd, "B", "data");
  if (s.data.A > s.data.B) throw Error(ErrorCode::ValidationError, "data.A: must not exceed data.B");
  if (!jd.contains("u_minus")) throw Error(ErrorCode::ValidationError, "data.u_minus: missing");
  if (!jd.contains("u_plus")) throw Error(ErrorCode::ValidationError, "data.u_plus: missing");
  s.data.u_minus = step_from_json(jd.at("u_minus"), "data.u_minus");
  s.data.u_plus = step_from_json(jd.at("u_plus"), "data.u_plus");
  if (!jd.contains("ubar")) {
    s.data.ubar = StepFunction(s.data.u_minus.values().back());
  } else if (jd.at("ubar").is_object() && jd.at("ubar").contains("random")) {
    const Json& r = jd.at("ubar").at("random");
    RandomSteps rs;
    double steps = number_at(r, "steps", "data.ubar.random");
    if (steps < 1 || steps != std::floor(steps) || steps > 1e6) {
      throw Error(ErrorCode::ValidationError, "data.ubar.random.steps: expected a positive integer");
    }
    rs.steps = static_cast<int>(steps);
    rs.lo = number_at(r, "lo", "data.ubar.random");
    rs.hi = number_at(r, "hi", "data.ubar.random");
    if (!(rs.lo <= rs.hi)) throw Error(ErrorCode::ValidationError, "data.ubar.random: need lo <= hi");
    if (!r.contains("seed") || !r.at("seed").is_number_integer()) {
      throw Error(ErrorCode::ValidationError, "data.ubar.random.seed: expected an integer");
    }
    rs.seed = r.at("seed").get<std::uint64_t>();
    s.data.ubar = rs;
  } else {
    s.data.ubar = step_from_json(jd.at("ubar"), "data.ubar");
  }
  if (j.contains("hypothesis") && !j.at("hypothesis").is_null()) {
    s.hypothesis = hypothesis_from_json(j.at("hypothesis"));
  }
  if (j.contains("run")) {
    const Json& jr = j.at("run");
    if (jr.contains("t_max") && !jr.at("t_max").is_null()) {
      s.run.t_max = number_at(jr, "t_max", "run");
      if (!(*s.run.t_max > 0.0)) throw Error(ErrorCode::ValidationError, "run.t_max: must be positive");
    }
    if (jr.contains("snapshots")) {
      for (const Json& t : jr.at("snapshots")) {
        if (!t.is_number() || t.get<double>() < 0.0) {
          throw Error(ErrorCode::ValidationError, "run.snapshots: expected nonnegative numbers");
        }
        s.run.snapshots.push_back(t.get<double>());
      }
    }
    if (jr.contains("output")) s.run.output = jr.at("output").get<std::string>();
  }
  // Checks that the data fits the flux.
  Flux fl = build_flux(s);
  StepFunction u0 = initial_data(s.data);
  if (!fl.contains(u0.min()) || !fl.contains(u0.max())) {
    throw Error(ErrorCode::ValidationError, "data: values leave the flux working interval");
  }
  return s;
}

Json emit_scenario(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  if (const auto* fl = std::get_if<Flux>(&s.flux)) {
    j["flux"] = to_json(*fl);
  } else {
    j["flux"] = to_json(std::get<AnalyticFluxSpec>(s.flux));
  }
  Json d{{"A", s.data.A}, {"B", s.data.B}, {"u_minus", to_json(s.data.u_minus)},
         {"u_plus", to_json(s.data.u_plus)}};
  if (const auto* rs = std::get_if<RandomSteps>(&s.data.ubar)) {
    d["ubar"] = Json{{"random", {{"steps", rs->steps}, {"lo", rs->lo}, {"hi", rs->hi}, {"seed", rs->seed}}}};
  } else {
    d["ubar"] = to_json(std::get<StepFunction>(s.data.ubar));
  }
  j["data"] = d;
  if (s.hypothesis) j["hypothesis"] = to_json(*s.hypothesis);
  Json r;
  if (s.run.t_max) r["t_max"] = *s.run.t_max;
  r["snapshots"] = s.run.snapshots;
  if (!s.run.output.empty()) r["output"] = s.run.output;
  j["run"] = r;
  return j;
}

Scenario load_scenario(const std::string& path) {
  if (!fs::exists(path)) {
    auto names = preset_names();
    if (std::find(names.begin(), names.end(), path) != names.end()) return preset(path);
    throw Error(ErrorCode::IoError, "no scenario file or preset named " + path);
  }
  return parse_scenario(read_json_file(path));
}

std::vector<std::string> preset_names() {
  return {"burgers", "neg_cubic", "double_well", "buckley_leverett", "counterexample_1", "counterexample_2"};
}

Scenario preset(const std::string& name) {
  const double c = std::sqrt(2.0 / 3.0);
  if (name == "burgers") {
    return base(name, analytic(FluxKind::Burgers, -3.0, 3.0, 0.25), 1.0, RandomSteps{8, -2.0, 2.0, 1}, 0.0,
                {0.0, 0.0, 0.5, 0.5, 1.0, 1.0}, 100.0);
  }
  if (name == "neg_cubic") {
    return base(name, analytic(FluxKind::NegCubic, -3.0, 3.0, 1.0 / 16), -0.5,
                RandomSteps{6, -1.5, 2.5, 7}, 2.0, {-0.5, -0.5, 0.0, 0.0, 2.0, 2.0}, 50.0);
  }
  if (name == "double_well") {
    return base(name, analytic(FluxKind::DoubleWell, -3.5, 3.5, 1.0 / 16, {-c, c}), 2.45,
                RandomSteps{8, -3.0, 3.0, 3}, -2.45, {-2.5, -2.4, -c, c, 2.4, 2.5}, 100.0);
  }
  if (name == "buckley_leverett") {
    AnalyticFluxSpec spec = analytic(FluxKind::BuckleyLeverett, -0.2, 1.2, 0.02);
    spec.r = 1.0;
    return base(name, spec, 0.6, RandomSteps{6, 0.0, 1.0, 5}, 0.1, {0.1, 0.1, 0.5, 0.5, 0.6, 0.6}, 100.0);
  }
  if (name == "counterexample_1") {
    return base(name, analytic(FluxKind::DoubleWell, -3.0, 3.0, 1.0 / 16, {-c, c}), 2.0,
                StepFunction(0.0), -2.0, {-2.0, -2.0, -c, c, 2.0, 2.0}, 100.0);
  }
  if (name == "counterexample_2") {
    AnalyticFluxSpec spec = analytic(FluxKind::NegCubic, -3.0, 3.0, 1.0 / 16);
    // Pinning the left slope at -1 to f'(-1) = -3 keeps the contact at -1 | 2
    // exactly parallel to the last front of the fan.
    spec.pins = {-1.0};
    return base(name, spec, -1.5, StepFunction(-1.0), 2.0, {-1.0, -1.0, 0.0, 0.0, 2.0, 2.0}, 100.0);
  }
  throw Error(ErrorCode::ValidationError, "unknown preset '" + name + "'");
}

StepFunction expand_ubar(const ScenarioData& d) {
  if (const auto* u = std::get_if<StepFunction>(&d.ubar)) return *u;
  const RandomSteps& rs = std::get<RandomSteps>(d.ubar);
  Rng rng(rs.seed);
  std::vector<double> js, vs;
  for (int i = 0; i < rs.steps; ++i) {
    vs.push_back(rng.uniform(rs.lo, rs.hi));
    if (i > 0) js.push_back(d.A + (d.B - d.A) * i / rs.steps);
  }
  // Outside (A, B) the value is irrelevant; keep the edge values.
  return StepFunction::from_pieces(js, vs);
}

StepFunction initial_data(const ScenarioData& d) {
  std::vector<double> js, vs{d.u_minus.values().front()};
  const auto& mj = d.u_minus.jumps();
  for (std::size_t i = 0; i < mj.size() && mj[i] < d.A; ++i) {
    js.push_back(mj[i]);
    vs.push_back(d.u_minus.values()[i + 1]);
  }
  if (d.B > d.A) {
    StepFunction ubar = expand_ubar(d);
    js.push_back(d.A);
    vs.push_back(ubar(d.A));
    for (std::size_t i = 0; i < ubar.jumps().size(); ++i) {
      double x = ubar.jumps()[i];
      if (x > d.A && x < d.B) {
        js.push_back(x);
        vs.push_back(ubar.values()[i + 1]);
      }
    }
  }
  js.push_back(d.B);
  vs.push_back(d.u_plus(d.B));
  const auto& pj = d.u_plus.jumps();
  for (std::size_t i = 0; i < pj.size(); ++i) {
    if (pj[i] > d.B) {
      js.push_back(pj[i]);
      vs.push_back(d.u_plus.values()[i + 1]);
    }
  }
  return StepFunction::from_pieces(js, vs);
}

Flux build_flux(const Scenario& s) {
  if (const auto* fl = std::get_if<Flux>(&s.flux)) return *fl;
  AnalyticFluxSpec spec = std::get<AnalyticFluxSpec>(s.flux);
  std::vector<double> extra;
  collect_values(initial_data(s.data), extra);
  for (double v : extra) {
    if (v < spec.lo || v > spec.hi) {
      throw Error(ErrorCode::ValidationError, "data: value " + format_number(v) +
                                                  " outside flux.interval");
    }
  }
  if (s.hypothesis) {
    const HypothesisParams& hp = *s.hypothesis;
    for (double v : {hp.alpha1, hp.alpha2, hp.C, hp.D, hp.beta2, hp.beta1}) {
      if (v < spec.lo || v > spec.hi) {
        throw Error(ErrorCode::ValidationError, "hypothesis: value " + format_number(v) +
                                                    " outside flux.interval");
      }
      extra.push_back(v);
    }
  }
  spec.corners.insert(spec.corners.end(), extra.begin(), extra.end());
  try {
    return approximate_pw_affine(spec);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string("flux: ") + e.what());
  }
}

double horizon(const Scenario& s) {
  if (s.run.t_max) return *s.run.t_max;
  double w = std::abs(s.data.B - s.data.A);
  return w > 0.0 ? 100.0 * w : 100.0;
}

ShockData shock_data(const Scenario& s) {
  StepFunction u0 = initial_data(s.data);
  return {s.data.A, s.data.B, u0, hull_of(u0), hull_of(s.data.u_minus), hull_of(s.data.u_plus)};
}

RunResult run_scenario(const Scenario& s, const std::string& out_dir) {
  auto started = std::chrono::steady_clock::now();
  Flux fl = build_flux(s);
  ShockData data = shock_data(s);
  double T = horizon(s);

  Json report;
  report["name"] = s.name;
  Orientation ranges{data.minus_range, data.plus_range};
  Json conditions = nullptr;
  std::string kind = "unchecked";
  if (s.hypothesis) {
    try {
      ConditionVerdict v = check_main_conditions(fl, *s.hypothesis);
      ranges = emergence_ranges(*s.hypothesis, v.kind, data);
      conditions = to_json(v);
      kind = to_string(v.kind);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HypothesisNotChecked && e.code() != ErrorCode::NotATriplet) throw;
      kind = std::string(to_string(e.code()));
      conditions = Json{{"error", e.what()}};
    }
  }

  fs::create_directories(out_dir);
  SimState sim = init_state(fl, data.u0);
  EmergenceTracker tracker(ranges.left, ranges.right);
  tracker.observe(sim, false);
  std::vector<double> snaps = s.run.snapshots;
  if (snaps.empty()) snaps = {0.0, T};
  std::sort(snaps.begin(), snaps.end());
  snaps.erase(std::unique(snaps.begin(), snaps.end()), snaps.end());
  Json snapshot_files = Json::array();
  for (double t : snaps) {
    if (t > T) break;
    while (sim.step(t)) tracker.observe(sim, true);
    sim.set_time(t);
    std::string file = "profile_t" + format_number(t) + ".csv";
    write_text_file((fs::path(out_dir) / file).string(), profile_csv(sim.profile()));
    snapshot_files.push_back(file);
  }
  while (sim.step(T)) tracker.observe(sim, true);
  sim.set_time(T);
  EmergenceReport rep = tracker.finish(sim, T);
  SpeedBound bound = analytic_T0_bound(fl, ranges.left, ranges.right, data.data_range, data.A, data.B);
  double width = std::abs(data.B - data.A);

  std::ostringstream events;
  for (const EventRecord& e : sim.events()) events << to_json(e).dump() << '\n';
  write_text_file((fs::path(out_dir) / "events.ndjson").string(), events.str());
  write_text_file((fs::path(out_dir) / "trajectories.csv").string(), trajectories_csv(sim));

  Json samples = Json::array();
  for (const TimePoint& p : rep.r_samples) samples.push_back(Json{{"t", p.t}, {"x", p.x}});
  report["verdict"] = rep.emerged ? "emerged" : "not_emerged";
  report["kind"] = kind;
  report["conditions"] = conditions;
  report["witnesses"] = conditions.is_object() && conditions.contains("witnesses")
                            ? conditions.at("witnesses")
                            : Json::array();
  report["T0"] = rep.emerged ? Json(rep.T0) : Json(nullptr);
  report["x0"] = rep.emerged ? Json(rep.x0) : Json(nullptr);
  report["gamma"] = rep.emerged && width > 0.0 ? Json(rep.T0 / width) : Json(nullptr);
  report["T_tilde"] = bound.T_tilde ? Json(*bound.T_tilde) : Json(nullptr);
  report["speed_bounds"] = Json{{"s_left", bound.s_left}, {"s_right", bound.s_right}};
  report["horizon"] = T;
  report["left_range"] = {ranges.left.lo, ranges.left.hi};
  report["right_range"] = {ranges.right.lo, ranges.right.hi};
  report["events"] = rep.events;
  report["fronts_at_horizon"] = sim.front_count();
  report["post_events_checked"] = rep.post_events_checked;
  report["post_speeds"] = rep.post_speeds;
  report["r_samples"] = samples;
  report["snapshots"] = snapshot_files;
  double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  report["meta"] = Json{{"elapsed_ms", elapsed}};
  write_text_file((fs::path(out_dir) / "report.json").string(), report.dump(2) + "\n");
  return {report, rep.emerged ? 0 : 4};
}

std::vector<BatchItem> run_batch(const std::string& dir, const std::string& out_root, int jobs) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::IoError, dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BatchItem> items(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      BatchItem& item = items[i];
      item.file = files[i].filename().string();
      try {
        Scenario s = parse_scenario(read_json_file(files[i].string()));
        RunResult r = run_scenario(s, (fs::path(out_root) / files[i].stem()).string());
        item.exit_code = r.exit_code;
        item.message = r.report.at("verdict").get<std::string>();
      } catch (const Error& e) {
        bool config = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError;
        item.exit_code = config ? 2 : 1;
        item.message = e.what();
      }
    }
  };
  int n = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(files.size(), 1))));
  std::vector<std::thread> pool;
  for (int k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return items;
}

}  // namespace shocklab
