#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wcc/analysis.hpp"

namespace wcc {

struct InvariantCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<CellMask> counterexample;  // lowest violating mask
};

struct InvariantReport {
  std::string space;
  FunctionKind function = FunctionKind::kIdentity;
  std::vector<InvariantCheck> checks;

  bool passed() const noexcept;
};

// Evaluates the cost-oracle invariants on every nonempty subset of the space:
// cost bounds, #_n <= #_b, max-rate => all-informants, single-point superset
// monotonicity, bit-adaptive dominance, OR-vs-identity dominance, invariance
// under generating relabelings and strategy soundness. Throws
// EnumerationTooLarge when 2^cells - 1 exceeds the guard.
InvariantReport check_invariants(const SampleSpace& space, FunctionKind f,
                                 const AnalysisOptions& options = {});

}  // namespace wcc
