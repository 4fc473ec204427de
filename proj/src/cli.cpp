#include "wcc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "wcc/analysis_io.hpp"
#include "wcc/error.hpp"
#include "wcc/invariants.hpp"
#include "wcc/support_io.hpp"
#include "wcc/version.hpp"

namespace wcc::cli {
namespace {

using nlohmann::json;

struct Config {
  std::string command;
  std::string space = "";
  std::string function = "identity";
  std::string model = kBlockSerialModel;
  std::string predicate;
  std::string kind = "bits";
  std::string mode;
  std::string suite;
  std::string format;
  std::string input;
  std::string input_format = "auto";
  std::string output;
  std::string q_range = "3..10";
  std::string n_range = "3..10";
  int cardinality = 0;
  int jobs = 1;
  int cell_cap = kDefaultCellCap;
  std::uint64_t enum_guard = kDefaultEnumerationGuard;
  std::size_t state_cap = kDefaultDiagnosticStateCap;
  bool allow_large = false;
  bool strategies = false;
  bool counts = false;
  bool negate = false;
  bool list = false;
};

// Raised for flag combinations CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--jobs", c.jobs, "Worker threads for enumeration")->check(CLI::Range(1, 256));
  sub->add_option("--cell-cap", c.cell_cap, "Largest accepted q^N")->check(CLI::Range(1, kMaxCells));
  sub->add_option("--enum-guard", c.enum_guard, "Largest number of subsets per enumeration");
  sub->add_option("--state-cap", c.state_cap, "Memo limit of the bit-adaptive oracle");
  sub->add_flag("--allow-large", c.allow_large, "Acknowledge guard values above the defaults");
  sub->add_option("-o,--output", c.output, "Write results to this file instead of stdout");
}

void add_space(CLI::App* sub, Config& c, bool required) {
  auto* opt = sub->add_option("--space", c.space, "Sample space as QxN, e.g. 5x2");
  if (required) opt->required();
}

void add_function(CLI::App* sub, Config& c) {
  sub->add_option("--function", c.function, "Target function")
      ->check(CLI::IsMember({"identity", "bitor"}));
}

void add_predicate(CLI::App* sub, Config& c) {
  sub->add_option("--predicate", c.predicate, "Incompressibility predicate")
      ->check(CLI::IsMember({"max-rate-bits", "all-informants", "beta-one"}));
}

AnalysisOptions analysis_options(const Config& c) {
  AnalysisOptions options;
  options.jobs = c.jobs;
  options.limits.max_subsets = c.enum_guard;
  return options;
}

void check_guards(const Config& c) {
  const bool raised = c.cell_cap > kDefaultCellCap || c.enum_guard > kDefaultEnumerationGuard ||
                      c.state_cap > kDefaultDiagnosticStateCap;
  if (raised && !c.allow_large) {
    throw UsageError("guard values above the defaults need --allow-large");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json witness_json(const SupportSet& s) { return json::parse(serialize_support(s, TextFormat::kJson)); }

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("expected a range like 3..10, got '" + text + "'");
  }
}

// ---------------------------------------------------------------------------
// Commands. Each returns the text to emit and the exit code.

struct Outcome {
  std::string text;
  int code = kSuccess;
};

Outcome cmd_analyze(const Config& c) {
  const std::string text = read_file(c.input);
  TextFormat format = detect_format(text);
  if (c.input_format == "json") format = TextFormat::kJson;
  if (c.input_format == "grid") format = TextFormat::kGrid;
  const SupportSet s = parse_support(text, format, c.cell_cap);
  if (!c.space.empty() && !(parse_space(c.space, c.cell_cap) == s.space())) {
    throw UsageError("input is a " + s.space().label() + " support, but --space is " + c.space);
  }
  const FunctionKind f = parse_function(c.function);
  if (c.model == kBitAdaptiveModel) {
    const int bits = worst_case_bits_interleaved(s, f, c.state_cap);
    json j;
    j["version"] = kVersion;
    j["model"] = kBitAdaptiveModel;
    j["diagnostic"] = true;
    j["function"] = to_string(f);
    j["space"] = s.space().label();
    j["measures"] = to_json(summarize(s));
    j["bits_worst"] = bits;
    j["max_rate"] = bits == s.space().num_informants() * ceil_log2(s.space().alphabet_size());
    return {dump(j)};
  }
  return {dump(to_json(classify(s, f), c.strategies))};
}

Outcome cmd_thresholds(const Config& c) {
  const FunctionKind f = parse_function(c.function);
  ThresholdSet t;
  std::string label;
  if (c.mode == "oracle") {
    const SampleSpace space = parse_space(c.space, c.cell_cap);
    label = space.label();
    t = c.predicate.empty()
            ? oracle_thresholds(space, f, analysis_options(c))
            : oracle_thresholds(space, f, parse_predicate(c.predicate), analysis_options(c));
  } else {
    // Closed forms need no enumeration, so the cell cap does not apply.
    const SpaceDimensions d = parse_dimensions(c.space);
    t = formula_thresholds(d.q, d.n, f);
    label = std::to_string(d.q) + "x" + std::to_string(d.n);
  }
  const std::string fmt = c.format.empty() ? "json" : c.format;
  if (fmt == "json") {
    json j = to_json(t);
    j["space"] = label;
    return {dump(j)};
  }
  auto cell = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
  std::string body = cell(t.m1) + "," + cell(t.m2) + "," + cell(t.m3) + "," + cell(t.m4) + "\n";
  if (fmt == "csv") body = "M1,M2,M3,M4\n" + body;
  return {body};
}

Outcome cmd_enumerate(const Config& c) {
  const SampleSpace space = parse_space(c.space, c.cell_cap);
  const FunctionKind f = parse_function(c.function);
  const Predicate p = parse_predicate(c.predicate.empty() ? "max-rate-bits" : c.predicate);
  const CountReport report = count_at_cardinality(space, c.cardinality, p, f, analysis_options(c));
  if (c.format == "csv") return {to_csv(report)};
  json j = to_json(report);
  if (c.list) {
    // Sequential on purpose: the listing order is the combination order.
    j["sets"] = json::array();
    CostEvaluator evaluator(space, f);
    SupportEnumerator stream(space, c.cardinality, analysis_options(c).limits);
    while (auto s = stream.next()) {
      if (is_incompressible(evaluator, s->mask(), p)) j["sets"].push_back(s->points());
    }
  }
  return {dump(j)};
}

Outcome cmd_regions(const Config& c) {
  const SampleSpace space = parse_space(c.space, c.cell_cap);
  const FunctionKind f = parse_function(c.function);
  const RegionKind kind = parse_region_kind(c.kind);
  RegionTable table;
  if (c.mode == "formula") {
    if (f != FunctionKind::kIdentity) throw UsageError("formula regions exist only for identity");
    table = formula_region_table(space, kind);
  } else {
    table = region_table(space, f, kind, analysis_options(c), c.counts);
  }
  if (c.format == "json") return {dump(to_json(table))};
  return {to_csv(table)};
}

Outcome cmd_witness(const Config& c) {
  const SampleSpace space = parse_space(c.space, c.cell_cap);
  const FunctionKind f = parse_function(c.function);
  const Predicate p = parse_predicate(c.predicate.empty() ? "max-rate-bits" : c.predicate);
  const auto witness = find_witness(space, c.cardinality, p, f, c.negate, analysis_options(c));
  std::string fmt = c.format;
  if (fmt.empty()) fmt = space.num_informants() == 2 ? "grid" : "json";
  if (!witness) {
    if (fmt == "grid") return {"none\n"};
    return {dump(json{{"version", kVersion}, {"model", kBlockSerialModel}, {"witness", nullptr}})};
  }
  if (fmt == "grid") return {serialize_support(*witness, TextFormat::kGrid)};
  json j{{"version", kVersion},
         {"model", kBlockSerialModel},
         {"space", space.label()},
         {"function", to_string(f)},
         {"predicate", to_string(p)},
         {"negate", c.negate},
         {"witness", witness_json(*witness)}};
  return {dump(j)};
}

// --- verify ---------------------------------------------------------------

struct Verdict {
  json checks = json::array();
  int passed = 0;

  void add(const std::string& name, const json& expected, const json& actual, bool ok,
           const json& counterexample = nullptr) {
    json check{{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", ok}};
    if (!counterexample.is_null()) check["counterexample"] = counterexample;
    checks.push_back(std::move(check));
    if (ok) ++passed;
  }
};

json opt_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

void verify_lemmas(const Config& c, Verdict& v, json& meta) {
  const SampleSpace space = parse_space(c.space.empty() ? "3x2" : c.space, c.cell_cap);
  const FunctionKind f = parse_function(c.function);
  const AnalysisOptions options = analysis_options(c);
  meta["space"] = space.label();
  meta["function"] = to_string(f);
  const ThresholdSet formula = formula_thresholds(space.alphabet_size(), space.num_informants(), f);
  const ThresholdSet oracle = oracle_thresholds(space, f, options);

  struct Row {
    const char* name;
    std::optional<std::int64_t> ThresholdSet::*field;
    Predicate predicate;
    bool incompressible_side;
  };
  const Row rows[] = {{"M1", &ThresholdSet::m1, Predicate::kMaxRateBits, true},
                      {"M2", &ThresholdSet::m2, Predicate::kMaxRateBits, false},
                      {"M3", &ThresholdSet::m3, Predicate::kAllInformants, true},
                      {"M4", &ThresholdSet::m4, Predicate::kAllInformants, false}};
  for (const Row& row : rows) {
    const auto& expected = formula.*row.field;
    if (!expected) continue;
    const auto& actual = oracle.*row.field;
    const bool ok = actual == expected;
    json counterexample = nullptr;
    if (!ok && actual) {
      if (auto w = find_witness(space, static_cast<int>(*actual), row.predicate, f,
                                !row.incompressible_side, options)) {
        counterexample = witness_json(*w);
      }
    }
    v.add(row.name, *expected, opt_json(actual), ok, counterexample);
  }
  if (f == FunctionKind::kBitwiseOr && formula.m1 && *formula.m1 <= space.total_cells()) {
    const int m1 = static_cast<int>(*formula.m1);
    const CountReport count = count_at_cardinality(space, m1, Predicate::kMaxRateBits, f, options);
    json witnesses = json::array();
    if (count.incompressible_count != 1) {
      CostEvaluator evaluator(space, f);
      SupportEnumerator stream(space, m1, options.limits);
      while (auto s = stream.next()) {
        if (witnesses.size() >= 16) break;
        if (is_incompressible(evaluator, s->mask(), Predicate::kMaxRateBits)) {
          witnesses.push_back(witness_json(*s));
        }
      }
    }
    v.add("M1_unique_witness", 1, big_to_json(count.incompressible_count),
          count.incompressible_count == 1, witnesses.empty() ? json(nullptr) : witnesses);
  }
}

void verify_counts(const Config& c, Verdict& v, json& meta) {
  const SampleSpace space = parse_space(c.space.empty() ? "5x2" : c.space, c.cell_cap);
  const AnalysisOptions options = analysis_options(c);
  meta["space"] = space.label();
  meta["function"] = "identity";
  const FormulaCounts formula = formula_counts(space.alphabet_size(), space.num_informants());
  const bool both = c.predicate.empty();
  if (both || c.predicate == "max-rate-bits") {
    const CountReport r = count_at_cardinality(space, static_cast<int>(formula.m1),
                                               Predicate::kMaxRateBits, FunctionKind::kIdentity, options);
    v.add("max_rate_count_at_M1", big_to_json(formula.m1_count), big_to_json(r.incompressible_count),
          r.incompressible_count == formula.m1_count);
    v.add("max_rate_fraction_at_M1", to_fraction_string(formula.m1_fraction),
          to_fraction_string(r.fraction), r.fraction == formula.m1_fraction);
  }
  if (both || c.predicate == "all-informants") {
    const CountReport r = count_at_cardinality(space, static_cast<int>(formula.m3),
                                               Predicate::kAllInformants, FunctionKind::kIdentity, options);
    v.add("all_informants_count_at_M3", big_to_json(formula.m3_count),
          big_to_json(r.incompressible_count), r.incompressible_count == formula.m3_count);
    v.add("all_informants_fraction_at_M3", to_fraction_string(formula.m3_fraction),
          to_fraction_string(r.fraction), r.fraction == formula.m3_fraction);
  }
  if (c.predicate == "beta-one") throw UsageError("the counts suite checks max-rate-bits and all-informants");
}

void verify_proposition_suite(const Config& c, Verdict& v, json& meta) {
  const auto [q_min, q_max] = parse_range(c.q_range);
  const auto [n_min, n_max] = parse_range(c.n_range);
  meta["q_range"] = c.q_range;
  meta["n_range"] = c.n_range;
  for (const PropositionRow& row : verify_proposition(q_min, q_max, n_min, n_max)) {
    const ThresholdSet& t = row.thresholds;
    v.add("q=" + std::to_string(row.q) + ",N=" + std::to_string(row.n), "M3 < M1 < M4 < M2",
          json{{"M1", *t.m1}, {"M2", *t.m2}, {"M3", *t.m3}, {"M4", *t.m4}}, row.holds);
  }
}

void verify_invariants(const Config& c, Verdict& v, json& meta) {
  const SampleSpace space = parse_space(c.space.empty() ? "2x2" : c.space, c.cell_cap);
  const FunctionKind f = parse_function(c.function);
  meta["space"] = space.label();
  meta["function"] = to_string(f);
  const InvariantReport report = check_invariants(space, f, analysis_options(c));
  for (const InvariantCheck& check : report.checks) {
    json counterexample = nullptr;
    if (check.counterexample) {
      counterexample = witness_json(SupportSet::from_mask(space, *check.counterexample));
    }
    v.add(check.name, 0, check.violations, check.violations == 0, counterexample);
  }
}

Outcome cmd_verify(const Config& c) {
  Verdict v;
  json j;
  j["version"] = kVersion;
  j["model"] = kBlockSerialModel;
  j["suite"] = c.suite;
  if (c.suite == "lemmas") verify_lemmas(c, v, j);
  else if (c.suite == "counts") verify_counts(c, v, j);
  else if (c.suite == "proposition") verify_proposition_suite(c, v, j);
  else verify_invariants(c, v, j);
  const int total = static_cast<int>(v.checks.size());
  j["checks"] = v.checks;
  j["passed"] = v.passed;
  j["total"] = total;
  j["ok"] = v.passed == total;
  return {dump(j), v.passed == total ? kSuccess : kVerificationFailed};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact worst-case compressibility laboratory for finite support sets", "wcclab"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Costs and compressibility of one support set");
  analyze->add_option("--input", c.input, "Support set file (JSON or grid)")->required();
  analyze->add_option("--input-format", c.input_format)->check(CLI::IsMember({"auto", "json", "grid"}));
  analyze->add_option("--model", c.model, "Cost model")
      ->check(CLI::IsMember({kBlockSerialModel, kBitAdaptiveModel}));
  analyze->add_flag("--strategies", c.strategies, "Include the optimal strategy trees");
  add_space(analyze, c, false);
  add_function(analyze, c);

  auto* thresholds = app.add_subcommand("thresholds", "Threshold cardinalities M1..M4");
  add_space(thresholds, c, true);
  add_function(thresholds, c);
  add_predicate(thresholds, c);
  thresholds->add_option("--mode", c.mode)->check(CLI::IsMember({"formula", "oracle"}));
  thresholds->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv", "text"}));

  auto* enumerate = app.add_subcommand("enumerate", "Count incompressible sets of one cardinality");
  add_space(enumerate, c, true);
  add_function(enumerate, c);
  add_predicate(enumerate, c);
  enumerate->add_option("--cardinality", c.cardinality)->required();
  enumerate->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_flag("--list", c.list, "Also list every incompressible set (JSON only)");

  auto* regions = app.add_subcommand("regions", "Compressibility region table per cardinality");
  add_space(regions, c, true);
  add_function(regions, c);
  regions->add_option("--kind", c.kind)->check(CLI::IsMember({"bits", "informants"}));
  regions->add_option("--mode", c.mode)->check(CLI::IsMember({"formula", "oracle"}));
  regions->add_flag("--counts", c.counts, "Exact incompressible counts per row");
  regions->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the oracles");
  verify->add_option("--suite", c.suite)
      ->required()
      ->check(CLI::IsMember({"lemmas", "counts", "proposition", "invariants"}));
  add_space(verify, c, false);
  add_function(verify, c);
  add_predicate(verify, c);
  verify->add_option("--q-range", c.q_range, "Alphabet sizes for the proposition suite, e.g. 3..10");
  verify->add_option("--n-range", c.n_range, "Informant counts for the proposition suite");

  auto* witness = app.add_subcommand("witness", "First set of a cardinality meeting a predicate");
  add_space(witness, c, true);
  add_function(witness, c);
  add_predicate(witness, c);
  witness->add_option("--cardinality", c.cardinality)->required();
  witness->add_flag("--negate", c.negate, "Look for a compressible set instead");
  witness->add_option("--format", c.format)->check(CLI::IsMember({"grid", "json"}));

  for (auto* sub : {analyze, thresholds, enumerate, regions, verify, witness}) add_common(sub, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  try {
    check_guards(c);
    Outcome outcome;
    if (*analyze) outcome = cmd_analyze(c);
    else if (*thresholds) outcome = cmd_thresholds(c);
    else if (*enumerate) outcome = cmd_enumerate(c);
    else if (*regions) outcome = cmd_regions(c);
    else if (*verify) outcome = cmd_verify(c);
    else outcome = cmd_witness(c);

    if (c.output.empty()) {
      out << outcome.text;
    } else {
      std::ofstream file(c.output, std::ios::binary);
      if (!file) throw UsageError("cannot write '" + c.output + "'");
      file << outcome.text;
    }
    return outcome.code;
  } catch (const Error& e) {
    err << "wcclab: " << e.what() << "\n";
    return e.is_guard() ? kGuardRefused : kUsageError;
  } catch (const UsageError& e) {
    err << "wcclab: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace wcc::cli
