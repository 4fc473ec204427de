#include "wcc/analysis_io.hpp"

#include <limits>
#include <sstream>

#include "wcc/version.hpp"

namespace wcc {
namespace {

constexpr const char* kCsvHeader =
    "cardinality,exists_incompressible,all_incompressible,label,count,total\n";

const char* source_name(ThresholdSource s) {
  return s == ThresholdSource::kFormula ? "formula" : "oracle";
}

nlohmann::json optional_to_json(const std::optional<std::int64_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json stamped() {
  nlohmann::json j;
  j["version"] = kVersion;
  j["model"] = kBlockSerialModel;
  return j;
}

void csv_row(std::ostringstream& out, int m, bool exists, bool all, RegionLabel label,
             const std::optional<BigInt>& count, const BigInt& total) {
  out << m << ',' << (exists ? "true" : "false") << ',' << (all ? "true" : "false") << ','
      << to_string(label) << ',' << (count ? count->str() : std::string()) << ',' << total.str()
      << '\n';
}

}  // namespace

nlohmann::json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

nlohmann::json rational_to_json(const Rational& value) {
  return {{"value", to_fraction_string(value)}, {"approx", approximate(value)}};
}

nlohmann::json to_json(const MeasureSummary& m) {
  return {{"ambiguity", m.ambiguity},
          {"marginal_ambiguities", m.marginal_ambiguities},
          {"sparsity", rational_to_json(m.sparsity)},
          {"naive_bit_budget", m.naive_bit_budget},
          {"min_bits_bound", m.min_bits_bound}};
}

nlohmann::json to_json(const CostReport& report, bool include_strategies) {
  nlohmann::json j = stamped();
  j["function"] = to_string(report.bits_strategy.function);
  j["space"] = report.bits_strategy.space.label();
  j["measures"] = to_json(report.measures);
  j["bits_worst"] = report.bits_worst;
  j["informants_worst"] = report.informants_worst;
  j["beta"] = rational_to_json(report.beta.value);
  j["eta"] = rational_to_json(report.eta.value);
  j["degenerate"] = report.beta.degenerate || report.eta.degenerate;
  j["bit_compressible"] = report.bit_compressible;
  j["informant_compressible"] = report.informant_compressible;
  j["max_rate"] = report.max_rate;
  j["all_informants"] = report.all_informants;
  if (include_strategies) {
    j["bits_strategy"] = strategy_to_json(report.bits_strategy);
    j["informants_strategy"] = strategy_to_json(report.informants_strategy);
  }
  return j;
}

nlohmann::json to_json(const ThresholdSet& t) {
  nlohmann::json j = stamped();
  j["function"] = to_string(t.function);
  j["source"] = source_name(t.source);
  j["M1"] = optional_to_json(t.m1);
  j["M2"] = optional_to_json(t.m2);
  j["M3"] = optional_to_json(t.m3);
  j["M4"] = optional_to_json(t.m4);
  return j;
}

nlohmann::json to_json(const CountReport& report) {
  nlohmann::json j = stamped();
  j["space"] = report.space;
  j["cardinality"] = report.cardinality;
  j["predicate"] = to_string(report.predicate);
  j["function"] = to_string(report.function);
  j["incompressible_count"] = big_to_json(report.incompressible_count);
  j["total_sets"] = big_to_json(report.total_sets);
  j["fraction"] = rational_to_json(report.fraction);
  return j;
}

nlohmann::json to_json(const FormulaCounts& c) {
  nlohmann::json j = stamped();
  j["M1"] = c.m1;
  j["M1_count"] = big_to_json(c.m1_count);
  j["M1_total"] = big_to_json(c.m1_total);
  j["M1_fraction"] = rational_to_json(c.m1_fraction);
  j["M3"] = c.m3;
  j["M3_count"] = big_to_json(c.m3_count);
  j["M3_total"] = big_to_json(c.m3_total);
  j["M3_fraction"] = rational_to_json(c.m3_fraction);
  return j;
}

nlohmann::json to_json(const RegionTable& table) {
  nlohmann::json j = stamped();
  j["space"] = table.space;
  j["function"] = to_string(table.function);
  j["kind"] = to_string(table.kind);
  j["source"] = source_name(table.source);
  j["rows"] = nlohmann::json::array();
  for (const RegionRow& row : table.rows) {
    j["rows"].push_back({{"cardinality", row.cardinality},
                         {"exists_incompressible", row.exists_incompressible},
                         {"all_incompressible", row.all_incompressible},
                         {"label", to_string(row.label)},
                         {"count", row.count ? big_to_json(*row.count) : nlohmann::json(nullptr)},
                         {"total", big_to_json(row.total)}});
  }
  return j;
}

std::string to_csv(const RegionTable& table) {
  std::ostringstream out;
  out << kCsvHeader;
  for (const RegionRow& row : table.rows) {
    csv_row(out, row.cardinality, row.exists_incompressible, row.all_incompressible, row.label,
            row.count, row.total);
  }
  return out.str();
}

std::string to_csv(const CountReport& report) {
  std::ostringstream out;
  out << kCsvHeader;
  const bool exists = report.incompressible_count > 0;
  const bool all = report.incompressible_count == report.total_sets;
  csv_row(out, report.cardinality, exists, all, label_for(exists, all), report.incompressible_count,
          report.total_sets);
  return out.str();
}

}  // namespace wcc
