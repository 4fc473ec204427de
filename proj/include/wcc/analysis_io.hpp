#pragma once

#include <json.hpp>
#include <string>

#include "wcc/analysis.hpp"

namespace wcc {

// Exact integers become JSON numbers when they fit in 64 bits, decimal
// strings otherwise.
nlohmann::json big_to_json(const BigInt& value);
// {"value": "num/den", "approx": double}
nlohmann::json rational_to_json(const Rational& value);

nlohmann::json to_json(const MeasureSummary& m);
nlohmann::json to_json(const CostReport& report, bool include_strategies);
nlohmann::json to_json(const ThresholdSet& t);
nlohmann::json to_json(const CountReport& report);
nlohmann::json to_json(const FormulaCounts& counts);
nlohmann::json to_json(const RegionTable& table);

// Header "cardinality,exists_incompressible,all_incompressible,label,count,total".
std::string to_csv(const RegionTable& table);
std::string to_csv(const CountReport& report);

}  // namespace wcc
