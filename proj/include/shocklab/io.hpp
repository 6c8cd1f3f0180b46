#pragma once

#include <string>

#include <json.hpp>

#include "shocklab/flux.hpp"
#include "shocklab/front_tracking.hpp"
#include "shocklab/lax_oleinik.hpp"
#include "shocklab/legendre.hpp"
#include "shocklab/riemann.hpp"
#include "shocklab/single_shock.hpp"
#include "shocklab/step_function.hpp"

namespace shocklab {

using Json = nlohmann::ordered_json;

Json to_json(const Flux& fl);
Json to_json(const AnalyticFluxSpec& spec);
Json to_json(const DualFlux& dual);
Json to_json(const StepFunction& u);
Json to_json(const WaveFront& w);
Json to_json(const EventRecord& e);
Json to_json(const CharData& cd);
Json to_json(const Witness& w);
Json to_json(const ConditionVerdict& v);
Json to_json(const HypothesisParams& hp);

// Accepts {breakpoints, values} or an analytic spec {kind, interval, mesh, ...}.
Flux flux_from_json(const Json& j, const std::string& where = "flux");
AnalyticFluxSpec analytic_spec_from_json(const Json& j, const std::string& where = "flux");
// Accepts a number (constant) or {jumps, values}.
StepFunction step_from_json(const Json& j, const std::string& where);
HypothesisParams hypothesis_from_json(const Json& j, const std::string& where = "hypothesis");

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Shortest decimal form that reads back to the same double.
std::string format_number(double x);

}  // namespace shocklab
