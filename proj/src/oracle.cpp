#include "wcc/oracle.hpp"

#include <algorithm>
#include <climits>

#include "wcc/error.hpp"
#include "wcc/measures.hpp"
#include "wcc/version.hpp"

namespace wcc {
namespace {

constexpr std::size_t kMemoTrimSize = std::size_t{1} << 21;
constexpr int kUnreachable = INT_MAX / 2;

}  // namespace

CostEvaluator::CostEvaluator(SampleSpace space, FunctionKind f)
    : space_(std::move(space)), table_(space_, f) {}

void CostEvaluator::trim() {
  if (bits_memo_.size() > kMemoTrimSize) bits_memo_.clear();
  if (informants_memo_.size() > kMemoTrimSize) informants_memo_.clear();
}

// Cost of querying `informant` first and continuing optimally. Returns
// kUnreachable if the query would not split the set; stops early (returning
// some value >= budget) once the budget is reached.
int CostEvaluator::query_cost(CellMask mask, int informant, CostMetric metric, int budget) {
  const int q = space_.alphabet_size();
  CellMask parts[kMaxCells];
  int k = 0;
  for (Symbol v = 0; v < q; ++v) {
    const CellMask part = mask & space_.slice(informant, v);
    if (part != 0) parts[k++] = part;
  }
  if (k < 2) return kUnreachable;
  const int step = metric == CostMetric::kBits ? ceil_log2(k) : 1;
  int total = step;
  for (int j = 0; j < k && total < budget; ++j) {
    total = std::max(total, step + solve(parts[j], metric));
  }
  return total;
}

int CostEvaluator::solve(CellMask mask, CostMetric metric) {
  if (table_.is_constant(mask)) return 0;
  auto& memo = metric == CostMetric::kBits ? bits_memo_ : informants_memo_;
  if (auto it = memo.find(mask); it != memo.end()) return it->second;

  int best = kUnreachable;
  for (int i = 0; i < space_.num_informants(); ++i) {
    best = std::min(best, query_cost(mask, i, metric, best));
  }
  memo.emplace(mask, best);
  return best;
}

StrategyNode CostEvaluator::extract(CellMask mask, CostMetric metric) {
  trim();
  StrategyNode node;
  node.consistent = mask;
  node.worst_case = solve(mask, metric);
  if (node.worst_case == 0) {
    node.output = table_.value(std::countr_zero(mask));
    return node;
  }
  // Lowest informant index among the optimal first queries.
  for (int i = 0; i < space_.num_informants(); ++i) {
    if (query_cost(mask, i, metric, kUnreachable) != node.worst_case) continue;
    node.informant = i;
    for (Symbol v = 0; v < space_.alphabet_size(); ++v) {
      const CellMask part = mask & space_.slice(i, v);
      if (part == 0) continue;
      node.candidates.push_back(v);
      node.children.push_back(extract(part, metric));
    }
    return node;
  }
  throw Error(ErrorCode::kInconsistentInput, "no optimal query found");
}

int CostEvaluator::interleaved_bits(CellMask mask, std::size_t max_states) {
  if (interleaved_memo_.size() > kMemoTrimSize) interleaved_memo_.clear();
  return interleaved(mask, max_states);
}

int CostEvaluator::interleaved(CellMask mask, std::size_t max_states) {
  if (table_.is_constant(mask)) return 0;
  if (auto it = interleaved_memo_.find(mask); it != interleaved_memo_.end()) return it->second;

  const int lower_bound = ceil_log2(table_.distinct_values(mask));
  const int q = space_.alphabet_size();
  int best = kUnreachable;
  for (int i = 0; i < space_.num_informants() && best > lower_bound; ++i) {
    CellMask parts[kMaxCells];
    int k = 0;
    for (Symbol v = 0; v < q; ++v) {
      const CellMask part = mask & space_.slice(i, v);
      if (part != 0) parts[k++] = part;
    }
    if (k < 2) continue;
    // T always holds the first candidate, so each split is visited once.
    const std::uint64_t splits = (std::uint64_t{1} << (k - 1)) - 1;
    for (std::uint64_t t = 0; t < splits && best > lower_bound; ++t) {
      CellMask yes = parts[0];
      for (int j = 1; j < k; ++j) {
        if ((t >> (j - 1)) & 1U) yes |= parts[j];
      }
      const CellMask no = mask & ~yes;
      int cost = 1 + interleaved(yes, max_states);
      if (cost < best) cost = std::max(cost, 1 + interleaved(no, max_states));
      best = std::min(best, cost);
    }
  }
  if (interleaved_memo_.size() >= max_states) {
    throw Error(ErrorCode::kStateSpaceTooLarge,
                "bit-adaptive memo exceeded " + std::to_string(max_states) + " states");
  }
  interleaved_memo_.emplace(mask, best);
  return best;
}

OracleResult worst_case_bits(const SupportSet& s, FunctionKind f) {
  CostEvaluator evaluator(s.space(), f);
  StrategyTree tree{s.space(), f, CostMetric::kBits, evaluator.extract(s.mask(), CostMetric::kBits)};
  const int value = tree.worst_case();
  return {value, std::move(tree)};
}

OracleResult worst_case_informants(const SupportSet& s, FunctionKind f) {
  CostEvaluator evaluator(s.space(), f);
  StrategyTree tree{s.space(), f, CostMetric::kInformants,
                    evaluator.extract(s.mask(), CostMetric::kInformants)};
  const int value = tree.worst_case();
  return {value, std::move(tree)};
}

int worst_case_bits_interleaved(const SupportSet& s, FunctionKind f, std::size_t max_states) {
  CostEvaluator evaluator(s.space(), f);
  return evaluator.interleaved_bits(s.mask(), max_states);
}

int Transcript::total_bits() const noexcept {
  int total = 0;
  for (const auto& step : steps) total += step.bits_charged;
  return total;
}

Transcript simulate(const StrategyTree& strategy, const Point& p) {
  const SampleSpace& space = strategy.space;
  if (!space.is_valid(p) || ((strategy.root.consistent >> space.index_of(p)) & 1U) == 0) {
    throw Error(ErrorCode::kPointNotInSupport, "point is not in the strategy's support set");
  }
  Transcript transcript;
  const StrategyNode* node = &strategy.root;
  while (!node->is_leaf()) {
    const Symbol value = p[static_cast<std::size_t>(node->informant)];
    const auto it = std::find(node->candidates.begin(), node->candidates.end(), value);
    const auto branch = static_cast<std::size_t>(it - node->candidates.begin());
    transcript.steps.push_back(
        {node->informant, value, ceil_log2(static_cast<std::int64_t>(node->candidates.size()))});
    node = &node->children[branch];
  }
  transcript.output = node->output;
  return transcript;
}

namespace {

nlohmann::json output_to_json(const StrategyTree& tree, std::uint32_t output) {
  if (tree.function == FunctionKind::kIdentity) {
    return tree.space.point_at(static_cast<int>(output));
  }
  return output;
}

nlohmann::json node_to_json(const StrategyTree& tree, const StrategyNode& node) {
  nlohmann::json j;
  j["kind"] = node.is_leaf() ? "leaf" : "query";
  j["worst_case"] = node.worst_case;
  j["consistent"] = ConsistentSet(tree.space, node.consistent).points();
  if (node.is_leaf()) {
    j["output"] = output_to_json(tree, node.output);
    return j;
  }
  j["informant"] = node.informant;
  j["candidates"] = node.candidates;
  j["children"] = nlohmann::json::array();
  for (const auto& child : node.children) j["children"].push_back(node_to_json(tree, child));
  return j;
}

}  // namespace

nlohmann::json strategy_to_json(const StrategyTree& strategy) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["model"] = kBlockSerialModel;
  j["metric"] = strategy.metric == CostMetric::kBits ? "bits" : "informants";
  j["function"] = to_string(strategy.function);
  j["space"] = strategy.space.label();
  j["worst_case"] = strategy.worst_case();
  j["root"] = node_to_json(strategy, strategy.root);
  return j;
}

}  // namespace wcc
