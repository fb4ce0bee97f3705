#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lieinv/classify.hpp"
#include "lieinv/contract.hpp"
#include "lieinv/step_function.hpp"

namespace lieinv {

using Json = nlohmann::ordered_json;

/// Parses JSON, rejecting repeated object keys. Throws ParseError.
nlohmann::json parse_json_strict(const std::string& text);

/// {"format":1,"family":..,"generic":..,"exceptional":[..]} with an "extension" object when
/// the points need one. Exact points render as {"point","value"}, branches as
/// {"minpoly","distinct_roots","value"}.
Json to_json(const StepFunction& f);
StepFunction step_function_from_json(const nlohmann::json& j);

Json to_json(const Params& p);
Json to_json(const Identification& id);
Json to_json(const CriterionResult& c);
Json to_json(const ContractionReport& r);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace lieinv
