#pragma once

// JSON documents for problem instances and coefficient vectors.
//
// Instance keys: "omega", "s", "mult": {"prefix": [...], "tail": int},
// "weights": {"family": {"c_a", "v1", "v2", "c_b", "v3"}} or
// {"explicit": {"a": [...], "b": [...], "limits": {...}}}.
// Limit values may be numbers or the string "inf".

#include <string>

#include "json.hpp"

#include "expweight/params.hpp"
#include "expweight/spaces.hpp"

namespace expweight {

using Json = nlohmann::json;

SpaceConfig config_from_json(const Json& doc);
Json config_to_json(const SpaceConfig& config);

WeightFamily weights_from_json(const Json& doc);
Json weights_to_json(const WeightFamily& weights);
MultiplicitySpec mult_from_json(const Json& doc);
Json mult_to_json(const MultiplicitySpec& mult);

/// Reads and parses a file; throws ParameterError on I/O or syntax errors.
Json read_json_file(const std::string& path);

/// {"entries": [{"index": [...], "re": x, "im": y}], "basis": "weighted"}
CoefficientVector coefficients_from_json(const Json& doc);
Json coefficients_to_json(const CoefficientVector& f);

/// Number, or "inf" for +infinity.
double number_or_inf(const Json& v);
Json json_number(double v);

} // namespace expweight
