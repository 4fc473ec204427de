#include "wcc/invariants.hpp"

#include <algorithm>
#include <array>

#include "wcc/error.hpp"
#include "wcc/symmetry.hpp"

namespace wcc {
namespace {

enum Check : std::size_t {
  kBounds,
  kInformantsBelowBits,
  kNesting,
  kMonotonicity,
  kInterleavedDominance,
  kFunctionDominance,
  kSymmetryInvariance,
  kStrategySoundness,
  kCheckCount,
};

constexpr std::array<const char*, kCheckCount> kNames = {
    "cost_bounds",           "informants_le_bits",    "max_rate_implies_all_informants",
    "superset_monotonicity", "bit_adaptive_dominance", "function_dominance",
    "symmetry_invariance",   "strategy_soundness",
};

using Tally = std::array<InvariantCheck, kCheckCount>;

void record(Tally& tally, Check check, bool ok, CellMask mask) {
  InvariantCheck& c = tally[check];
  ++c.checked;
  if (ok) return;
  ++c.violations;
  if (!c.counterexample || mask < *c.counterexample) c.counterexample = mask;
}

// Generators of the relabeling group: a coordinate transposition and a value
// transposition on coordinate 0 (plus all coordinate swaps for OR targets).
std::vector<Relabeling> generators(const SampleSpace& space, FunctionKind f) {
  std::vector<Relabeling> gens;
  const int n = space.num_informants();
  for (int i = 0; i + 1 < n; ++i) {
    Relabeling r = Relabeling::identity(space);
    std::swap(r.coord_perm[static_cast<std::size_t>(i)], r.coord_perm[static_cast<std::size_t>(i + 1)]);
    gens.push_back(r);
  }
  if (f == FunctionKind::kIdentity) {
    Relabeling swap_values = Relabeling::identity(space);
    std::swap(swap_values.value_maps[0][0], swap_values.value_maps[0][1]);
    gens.push_back(swap_values);
    Relabeling cycle_values = Relabeling::identity(space);
    auto& map = cycle_values.value_maps[0];
    std::rotate(map.begin(), map.begin() + 1, map.end());
    gens.push_back(cycle_values);
  }
  return gens;
}

CellMask image_of(const SampleSpace& space, const Relabeling& r, CellMask mask) {
  CellMask out = 0;
  for_each_cell(mask, [&](int cell) {
    out |= CellMask{1} << space.index_of(r.apply(space.point_at(cell)));
  });
  return out;
}

bool strategy_sound(const SampleSpace& space, FunctionKind f, const TargetTable& table,
                    CostEvaluator& evaluator, CellMask mask, CostMetric metric) {
  const StrategyTree tree{space, f, metric, evaluator.extract(mask, metric)};
  bool attained = false;
  bool ok = true;
  for_each_cell(mask, [&](int cell) {
    const Transcript t = simulate(tree, space.point_at(cell));
    const int cost = metric == CostMetric::kBits ? t.total_bits() : t.informants_queried();
    ok = ok && t.output == table.value(cell) && cost <= tree.worst_case();
    attained = attained || cost == tree.worst_case();
  });
  return ok && attained;
}

}  // namespace

bool InvariantReport::passed() const noexcept {
  for (const auto& c : checks) {
    if (c.violations != 0) return false;
  }
  return true;
}

InvariantReport check_invariants(const SampleSpace& space, FunctionKind f,
                                 const AnalysisOptions& options) {
  const int cells = space.total_cells();
  const std::uint64_t total = cells >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
  if (cells >= 63 || total > options.limits.max_subsets) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                "exhaustive invariant check over " + space.label() + " exceeds the guard");
  }
  const int n = space.num_informants();
  const int max_rate = n * ceil_log2(space.alphabet_size());
  const std::vector<Relabeling> gens = generators(space, f);
  const auto slots = static_cast<std::size_t>(std::max(options.jobs, 1));
  std::vector<Tally> tallies(slots);

  run_partitioned(total, options.jobs, [&](std::size_t worker, std::uint64_t begin, std::uint64_t end) {
    CostEvaluator evaluator(space, f);
    CostEvaluator identity(space, FunctionKind::kIdentity);
    const TargetTable& table = evaluator.table();
    Tally& tally = tallies[worker];
    for (std::uint64_t offset = begin; offset < end; ++offset) {
      const CellMask mask = offset + 1;
      const int bits = evaluator.bits(mask);
      const int informants = evaluator.informants(mask);
      const bool constant = table.is_constant(mask);

      bool bounds = bits >= ceil_log2(table.distinct_values(mask)) && bits <= max_rate &&
                    (bits == 0) == constant;
      if (f == FunctionKind::kIdentity) {
        int budget = 0;
        for (int i = 0; i < n; ++i) budget += ceil_log2(mask_ops::projection_size(space, mask, i));
        bounds = bounds && bits <= budget;
      }
      record(tally, kBounds, bounds, mask);
      record(tally, kInformantsBelowBits, informants <= n && (constant || informants <= bits), mask);
      record(tally, kNesting, bits != max_rate || informants == n, mask);

      bool monotone = true;
      for (int cell = 0; cell < cells && monotone; ++cell) {
        const CellMask bigger = mask | (CellMask{1} << cell);
        if (bigger == mask) continue;
        monotone = bits <= evaluator.bits(bigger) && informants <= evaluator.informants(bigger);
      }
      record(tally, kMonotonicity, monotone, mask);

      record(tally, kInterleavedDominance, evaluator.interleaved_bits(mask) <= bits, mask);
      record(tally, kFunctionDominance,
             f == FunctionKind::kIdentity ||
                 (bits <= identity.bits(mask) && informants <= identity.informants(mask)),
             mask);

      bool invariant = true;
      for (const Relabeling& g : gens) {
        const CellMask image = image_of(space, g, mask);
        invariant = invariant && evaluator.bits(image) == bits &&
                    evaluator.informants(image) == informants;
      }
      record(tally, kSymmetryInvariance, invariant, mask);

      record(tally, kStrategySoundness,
             strategy_sound(space, f, table, evaluator, mask, CostMetric::kBits) &&
                 strategy_sound(space, f, table, evaluator, mask, CostMetric::kInformants),
             mask);
    }
  });

  InvariantReport report;
  report.space = space.label();
  report.function = f;
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    InvariantCheck merged;
    merged.name = kNames[c];
    for (const Tally& tally : tallies) {
      const InvariantCheck& part = tally[c];
      merged.checked += part.checked;
      merged.violations += part.violations;
      if (part.counterexample &&
          (!merged.counterexample || *part.counterexample < *merged.counterexample)) {
        merged.counterexample = part.counterexample;
      }
    }
    report.checks.push_back(std::move(merged));
  }
  return report;
}

}  // namespace wcc
