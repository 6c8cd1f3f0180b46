#include "shocklab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "shocklab/error.hpp"

namespace shocklab {

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::ValidationError, where + "." + key + ": missing");
  }
  return j.at(key);
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw Error(ErrorCode::ValidationError, where + ": expected a number");
  return j.get<double>();
}

std::vector<double> numbers(const Json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::ValidationError, where + ": expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// Re-labels construction errors from the core with the offending field path.
template <typename F>
auto validated(const std::string& where, F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ValidationError) throw;
    throw Error(ErrorCode::ValidationError, where + ": " + e.what());
  }
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json to_json(const Flux& fl) {
  return Json{{"breakpoints", fl.breakpoints()}, {"values", fl.values()}};
}

Json to_json(const AnalyticFluxSpec& spec) {
  Json j{{"kind", to_string(spec.kind)},
         {"interval", {spec.lo, spec.hi}},
         {"mesh", spec.mesh},
         {"corners", spec.corners}};
  if (!spec.pins.empty()) j["pins"] = spec.pins;
  if (spec.kind == FluxKind::BuckleyLeverett) j["params"] = Json{{"r", spec.r}};
  if (spec.kind == FluxKind::Table) j["table"] = Json{{"x", spec.table_x}, {"f", spec.table_f}};
  return j;
}

Json to_json(const DualFlux& dual) {
  return Json{{"breakpoints", dual.breakpoints()},
              {"values", dual.values()},
              {"maximizers", dual.maximizers()}};
}

Json to_json(const StepFunction& u) {
  if (u.jumps().empty()) return Json(u.values().front());
  return Json{{"jumps", u.jumps()}, {"values", u.values()}};
}

Json to_json(const WaveFront& w) { return Json{{"l", w.left}, {"r", w.right}, {"s", w.speed}}; }

Json to_json(const EventRecord& e) {
  Json in = Json::array(), out = Json::array();
  for (const auto& w : e.in) in.push_back(to_json(w));
  for (const auto& w : e.out) out.push_back(to_json(w));
  return Json{{"t", e.t}, {"x", e.x}, {"in", in}, {"out", out}};
}

Json to_json(const CharData& cd) {
  return Json{{"x", cd.x},         {"t", cd.t},         {"v", cd.v},
              {"y_minus", cd.y_minus}, {"y_plus", cd.y_plus}, {"minimizers", cd.minimizers}};
}

Json to_json(const Witness& w) {
  return Json{{"condition", w.condition},
              {"theta", w.theta},
              {"lhs", w.lhs},
              {"rhs", w.rhs},
              {"at_boundary", w.at_boundary}};
}

Json to_json(const ConditionVerdict& v) {
  Json ws = Json::array();
  for (const auto& w : v.witnesses) ws.push_back(to_json(w));
  return Json{{"kind", to_string(v.kind)},
              {"triplet", to_string(v.triplet)},
              {"margin", number_or_null(v.margin)},
              {"tangent_margin", number_or_null(v.tangent_margin)},
              {"witnesses", ws}};
}

Json to_json(const HypothesisParams& hp) {
  return Json{{"alpha1", hp.alpha1}, {"alpha2", hp.alpha2}, {"C", hp.C},
              {"D", hp.D},           {"beta2", hp.beta2},   {"beta1", hp.beta1}};
}

AnalyticFluxSpec analytic_spec_from_json(const Json& j, const std::string& where) {
  AnalyticFluxSpec spec;
  const Json& kind = field(j, "kind", where);
  if (!kind.is_string()) throw Error(ErrorCode::ValidationError, where + ".kind: expected a string");
  spec.kind = validated(where + ".kind", [&] { return flux_kind_from_string(kind.get<std::string>()); });
  std::vector<double> iv = numbers(field(j, "interval", where), where + ".interval");
  if (iv.size() != 2) throw Error(ErrorCode::ValidationError, where + ".interval: expected [lo, hi]");
  spec.lo = iv[0];
  spec.hi = iv[1];
  spec.mesh = number(field(j, "mesh", where), where + ".mesh");
  if (j.contains("corners")) spec.corners = numbers(j.at("corners"), where + ".corners");
  if (j.contains("pins")) spec.pins = numbers(j.at("pins"), where + ".pins");
  if (j.contains("params") && j.at("params").contains("r")) {
    spec.r = number(j.at("params").at("r"), where + ".params.r");
  }
  if (spec.kind == FluxKind::Table) {
    const Json& t = field(j, "table", where);
    spec.table_x = numbers(field(t, "x", where + ".table"), where + ".table.x");
    spec.table_f = numbers(field(t, "f", where + ".table"), where + ".table.f");
  }
  if (!(spec.mesh > 0.0)) throw Error(ErrorCode::ValidationError, where + ".mesh: must be positive");
  if (!(spec.lo < spec.hi)) throw Error(ErrorCode::ValidationError, where + ".interval: need lo < hi");
  return spec;
}

Flux flux_from_json(const Json& j, const std::string& where) {
  if (j.is_object() && j.contains("kind")) {
    AnalyticFluxSpec spec = analytic_spec_from_json(j, where);
    return validated(where, [&] { return approximate_pw_affine(spec); });
  }
  std::vector<double> b = numbers(field(j, "breakpoints", where), where + ".breakpoints");
  std::vector<double> v = numbers(field(j, "values", where), where + ".values");
  return validated(where, [&] { return make_flux(b, v); });
}

StepFunction step_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return StepFunction(j.get<double>());
  std::vector<double> js = numbers(field(j, "jumps", where), where + ".jumps");
  std::vector<double> vs = numbers(field(j, "values", where), where + ".values");
  return validated(where, [&] { return StepFunction(js, vs); });
}

HypothesisParams hypothesis_from_json(const Json& j, const std::string& where) {
  return HypothesisParams{number(field(j, "alpha1", where), where + ".alpha1"),
                          number(field(j, "alpha2", where), where + ".alpha2"),
                          number(field(j, "C", where), where + ".C"),
                          number(field(j, "D", where), where + ".D"),
                          number(field(j, "beta2", where), where + ".beta2"),
                          number(field(j, "beta1", where), where + ".beta1")};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace shocklab
