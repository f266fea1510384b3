#pragma once

// JSON shapes shared by the C API, the CLI and the HTTP service.
// Schemas are documented in docs/json.md.

#include <json.hpp>

#include "flip/classify.hpp"
#include "flip/error.hpp"
#include "flip/forms.hpp"
#include "flip/oracle.hpp"

namespace flip {

nlohmann::json graph_json(const GraphSpec& g);
// Accepts {"n":..,"attach":[..]} or the "n=.. attach=.." text form.
GraphSpec graph_from_json(const nlohmann::json& j);

nlohmann::json pi_report(const Puzzle& p);
nlohmann::json label_json(const OrbitLabel& label);
nlohmann::json classify_json(const Puzzle& p, const Config& u);
nlohmann::json orbits_report(const Puzzle& p);
nlohmann::json verify_json(const VerifyReport& r);
// q-invariance and polarization run on every state when n <= exhaustive_n,
// otherwise on `samples` pseudo-random states. Orbit comparisons need n <= cap.
nlohmann::json forms_report(const GraphSpec& g, int cap, int exhaustive_n = 16, int samples = 4096);
nlohmann::json error_json(Errc code, const std::string& message);

}  // namespace flip
