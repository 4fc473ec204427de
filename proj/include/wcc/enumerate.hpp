#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "wcc/numeric.hpp"
#include "wcc/support.hpp"

namespace wcc {

inline constexpr std::uint64_t kDefaultEnumerationGuard = 100'000'000;

struct EnumerationLimits {
  std::uint64_t max_subsets = kDefaultEnumerationGuard;
};

// C(n, k) for n <= 64; exact (the largest value, C(64,32), fits in 64 bits).
std::uint64_t small_binomial(int n, int k);

// C(total_cells, m) after checking 1 <= m <= total_cells and the guard.
// Throws InvalidArgument or EnumerationTooLarge.
std::uint64_t checked_subset_count(const SampleSpace& space, int m,
                                   const EnumerationLimits& limits);

// Walks the k-subsets of {0..n-1} in lexicographic order of their sorted
// element tuples, starting from an arbitrary rank.
class CombinationCursor {
 public:
  CombinationCursor(int n, int k, std::uint64_t rank = 0);

  CellMask mask() const noexcept { return mask_; }
  // False once the last combination has been passed.
  bool next() noexcept;

 private:
  int n_;
  int k_;
  std::vector<int> elements_;
  CellMask mask_ = 0;
};

// Streams every support set of cardinality m in lexicographic combination
// order.
class SupportEnumerator {
 public:
  SupportEnumerator(SampleSpace space, int m, const EnumerationLimits& limits = {});

  std::uint64_t total() const noexcept { return total_; }
  std::optional<SupportSet> next();

 private:
  SampleSpace space_;
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
  CombinationCursor cursor_;
};

inline SupportEnumerator enumerate_supports(const SampleSpace& space, int m,
                                            const EnumerationLimits& limits = {}) {
  return SupportEnumerator(space, m, limits);
}

// Splits [0, total) into `jobs` contiguous rank ranges and runs
// fn(worker, begin, end) on each, one thread per range. Callers reduce the
// per-worker results in worker order.
template <typename Fn>
void run_partitioned(std::uint64_t total, int jobs, Fn&& fn) {
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)),
                                                         std::max<std::uint64_t>(total, 1)));
  if (workers == 1) {
    fn(std::size_t{0}, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    threads.emplace_back([&fn, w, begin, end] { fn(static_cast<std::size_t>(w), begin, end); });
  }
}

}  // namespace wcc
