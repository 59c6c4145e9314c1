#pragma once

// JSON spec files and reports.
//
// Metric spec:  {"f1": expr, "f2": expr, "domain": {"x1": [lo, hi], ...}}
// Soliton spec: {"metric": <metric spec>,
//                "V":   {"basis": "frame" | "coordinate", "components": [e, e, e]},
//                "eta": same shape, "lambda": expr, "mu": expr}
// Expressions are strings in the parse_expr syntax; plain JSON numbers are
// accepted as constants.

#include <string>

#include "json.hpp"

#include "etaricci/flatness.hpp"
#include "etaricci/soliton.hpp"

namespace etaricci {

using Json = nlohmann::json;

/// Malformed spec file or field; `where` names the file and/or field.
class SpecError : public Error {
 public:
  SpecError(const std::string& where, const std::string& message)
      : Error(where + ": " + message) {}
};

/// Reads and parses a JSON file. Syntax errors report file:line:column.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& source = "<input>");

DiagonalMetric metric_from_json(const Json& j, const std::string& source = "<input>");
Json metric_to_json(const DiagonalMetric& m);

SolitonData soliton_from_json(const Json& j, const std::string& source = "<input>");
/// Always written in frame components.
Json soliton_to_json(const SolitonData& s);

Json to_json(const ResidualReport& r);
Json to_json(const FlatnessVerdict& v);

}  // namespace etaricci
