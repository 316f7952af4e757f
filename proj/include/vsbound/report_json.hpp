#pragma once

// JSON and CSV serialization of reports. Rationals are written as "num/den"
// strings and Infinity as "inf"; integers are plain JSON numbers.

#include "vsbound/fields.hpp"
#include "vsbound/poly.hpp"
#include "vsbound/polytope.hpp"
#include "vsbound/valueset.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace vsbound {

using Json = nlohmann::ordered_json;

Json to_json(const FieldSpec& field);
/// Accepts {"p", "e"} and optionally "modulus" (ascending coefficients).
FieldSpec field_from_json(const Json& j);

Json to_json(const LatticePoint& v);
Json to_json(const LatticePolytope& P);
Json to_json(const MuResult& result, const LatticePolytope& P);
Json to_json(const BoundsReport& report);
Json to_json(const VarietyCheck& check);
Json to_json(const SharpInstance& instance);
Json to_json(const SweepSummary& summary);
/// Configuration, one report per instance in index order, and the summary.
Json to_json(const SweepResult& result, const SweepConfig& config);

/// The map a report was computed for.
struct Instance {
  FieldSpec field;
  std::vector<std::string> varnames;
  PolyVector map;
};

/// Reads back the "instance" object written by to_json(BoundsReport).
Instance instance_from_json(const Json& report);

/// Header plus one row per report, then a "summary" row.
void write_sweep_csv(std::ostream& os, const SweepResult& result);

}  // namespace vsbound
