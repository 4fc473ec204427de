#pragma once

#include <cstdint>
#include <vector>

#include "wcc/numeric.hpp"
#include "wcc/support.hpp"

namespace wcc {

// Smallest b with 2^b >= k. Throws InvalidArgument for k <= 0.
int ceil_log2(std::int64_t k);

struct MeasureSummary {
  std::int64_t ambiguity = 0;                   // |S|
  std::vector<std::int64_t> marginal_ambiguities;  // |S_{X_i}|
  Rational sparsity;                            // |S| / q^N
  int naive_bit_budget = 0;                     // sum_i ceil_log2(|S_{X_i}|)
  int min_bits_bound = 0;                       // ceil_log2(|S|)
};

MeasureSummary summarize(const SupportSet& s);

// A normalized cost. `degenerate` marks the singleton convention where the
// ratio is undefined and reported as 0.
struct NormalizedCost {
  Rational value;
  bool degenerate = false;
};

// bits_worst / naive_bit_budget. Throws InconsistentInput if bits_worst is
// negative or exceeds the budget.
NormalizedCost beta(const SupportSet& s, int bits_worst);

// informants_worst / N. Throws InconsistentInput if out of [0, N], or
// nonzero on a singleton.
NormalizedCost eta(const SupportSet& s, int informants_worst);

}  // namespace wcc
