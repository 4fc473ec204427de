#include "wcc/measures.hpp"

#include <bit>

#include "wcc/error.hpp"

namespace wcc {

int ceil_log2(std::int64_t k) {
  if (k <= 0) throw Error(ErrorCode::kInvalidArgument, "ceil_log2 needs k >= 1");
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(k - 1)));
}

MeasureSummary summarize(const SupportSet& s) {
  const SampleSpace& space = s.space();
  MeasureSummary m;
  m.ambiguity = s.size();
  for (int i = 0; i < space.num_informants(); ++i) {
    const auto marginal = mask_ops::projection_size(space, s.mask(), i);
    m.marginal_ambiguities.push_back(marginal);
    m.naive_bit_budget += ceil_log2(marginal);
  }
  m.sparsity = Rational(m.ambiguity, space.total_cells());
  m.min_bits_bound = ceil_log2(m.ambiguity);
  return m;
}

NormalizedCost beta(const SupportSet& s, int bits_worst) {
  const MeasureSummary m = summarize(s);
  if (bits_worst < 0 || bits_worst > m.naive_bit_budget) {
    throw Error(ErrorCode::kInconsistentInput,
                "#_b = " + std::to_string(bits_worst) + " outside [0, " +
                    std::to_string(m.naive_bit_budget) + "]");
  }
  if (m.naive_bit_budget == 0) return {Rational(0), true};
  return {Rational(bits_worst, m.naive_bit_budget), false};
}

NormalizedCost eta(const SupportSet& s, int informants_worst) {
  const int n = s.space().num_informants();
  if (informants_worst < 0 || informants_worst > n) {
    throw Error(ErrorCode::kInconsistentInput,
                "#_n = " + std::to_string(informants_worst) + " outside [0, " +
                    std::to_string(n) + "]");
  }
  if (s.size() == 1) {
    if (informants_worst != 0) {
      throw Error(ErrorCode::kInconsistentInput, "a singleton needs no queries");
    }
    return {Rational(0), true};
  }
  return {Rational(informants_worst, n), false};
}

}  // namespace wcc
