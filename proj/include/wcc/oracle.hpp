#pragma once

#include <cstdint>
#include <json.hpp>
#include <unordered_map>
#include <vector>

#include "wcc/support.hpp"
#include "wcc/target.hpp"

namespace wcc {

// What a strategy's worst case is measured in.
enum class CostMetric {
  kBits,        // block-serial informant bits
  kInformants,  // informants queried
};

// Leaf when `informant` < 0. A query node asks `informant` for its value;
// children[j] is the subtree for candidates[j].
struct StrategyNode {
  CellMask consistent = 0;
  int worst_case = 0;
  int informant = -1;
  std::vector<Symbol> candidates;
  std::vector<StrategyNode> children;
  std::uint32_t output = 0;  // meaningful at leaves

  bool is_leaf() const noexcept { return informant < 0; }
};

struct StrategyTree {
  SampleSpace space;
  FunctionKind function;
  CostMetric metric;
  StrategyNode root;

  int worst_case() const noexcept { return root.worst_case; }
};

struct OracleResult {
  int value;
  StrategyTree strategy;
};

// Block-serial model: the sink queries one informant at a time, in an order
// that may depend on earlier answers, and a queried informant with k
// remaining candidates is resolved at a cost of ceil_log2(k) uplink bits.
// Sink-to-informant traffic is free.
OracleResult worst_case_bits(const SupportSet& s, FunctionKind f);
OracleResult worst_case_informants(const SupportSet& s, FunctionKind f);

inline constexpr std::size_t kDefaultDiagnosticStateCap = std::size_t{1} << 22;

// Diagnostic bit-adaptive model: every question is a single membership bit
// "is x_i in T?" and questions to different informants may interleave.
// Never used for threshold verification. Throws StateSpaceTooLarge when the
// memo exceeds max_states.
int worst_case_bits_interleaved(const SupportSet& s, FunctionKind f,
                                std::size_t max_states = kDefaultDiagnosticStateCap);

struct TranscriptStep {
  int informant;
  Symbol value;
  int bits_charged;
};

struct Transcript {
  std::vector<TranscriptStep> steps;
  std::uint32_t output = 0;

  int total_bits() const noexcept;
  int informants_queried() const noexcept { return static_cast<int>(steps.size()); }
};

// Runs the strategy against one data vector. Throws PointNotInSupport.
Transcript simulate(const StrategyTree& strategy, const Point& p);

nlohmann::json strategy_to_json(const StrategyTree& strategy);

// Memoized evaluator over one (space, target). Values depend only on the
// consistent-set mask, so the memo may be reused across support sets.
// Not thread-safe; use one per worker.
class CostEvaluator {
 public:
  CostEvaluator(SampleSpace space, FunctionKind f);

  const SampleSpace& space() const noexcept { return space_; }
  const TargetTable& table() const noexcept { return table_; }

  // mask must be nonempty.
  int bits(CellMask mask) { return solve(mask, CostMetric::kBits); }
  int informants(CellMask mask) { return solve(mask, CostMetric::kInformants); }
  int interleaved_bits(CellMask mask, std::size_t max_states = kDefaultDiagnosticStateCap);

  StrategyNode extract(CellMask mask, CostMetric metric);

 private:
  int solve(CellMask mask, CostMetric metric);
  int query_cost(CellMask mask, int informant, CostMetric metric, int budget);
  int interleaved(CellMask mask, std::size_t max_states);
  void trim();

  SampleSpace space_;
  TargetTable table_;
  std::unordered_map<CellMask, int> bits_memo_;
  std::unordered_map<CellMask, int> informants_memo_;
  std::unordered_map<CellMask, int> interleaved_memo_;
};

}  // namespace wcc
