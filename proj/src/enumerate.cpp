#include "wcc/enumerate.hpp"

#include <array>

#include "wcc/error.hpp"

namespace wcc {
namespace {

using PascalTable = std::array<std::array<std::uint64_t, kMaxCells + 1>, kMaxCells + 1>;

const PascalTable& pascal() {
  static const PascalTable table = [] {
    PascalTable t{};
    for (int n = 0; n <= kMaxCells; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt power(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

double approximate(const Rational& r) { return r.convert_to<double>(); }

std::uint64_t small_binomial(int n, int k) {
  if (n < 0 || n > kMaxCells || k < 0 || k > n) return 0;
  return pascal()[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t checked_subset_count(const SampleSpace& space, int m,
                                   const EnumerationLimits& limits) {
  if (m < 1 || m > space.total_cells()) {
    throw Error(ErrorCode::kInvalidArgument,
                "cardinality " + std::to_string(m) + " outside [1, " +
                    std::to_string(space.total_cells()) + "]");
  }
  const std::uint64_t total = small_binomial(space.total_cells(), m);
  if (total > limits.max_subsets) {
    throw Error(ErrorCode::kEnumerationTooLarge,
                "C(" + std::to_string(space.total_cells()) + "," + std::to_string(m) +
                    ") = " + std::to_string(total) + " exceeds the enumeration guard of " +
                    std::to_string(limits.max_subsets));
  }
  return total;
}

CombinationCursor::CombinationCursor(int n, int k, std::uint64_t rank)
    : n_(n), k_(k), elements_(static_cast<std::size_t>(k)) {
  // Unrank: at each position take the smallest element whose block of
  // completions still contains the remaining rank.
  int next_min = 0;
  for (int pos = 0; pos < k; ++pos) {
    int c = next_min;
    for (;; ++c) {
      const std::uint64_t block = small_binomial(n - 1 - c, k - 1 - pos);
      if (rank < block) break;
      rank -= block;
    }
    elements_[static_cast<std::size_t>(pos)] = c;
    mask_ |= CellMask{1} << c;
    next_min = c + 1;
  }
}

bool CombinationCursor::next() noexcept {
  int pos = k_ - 1;
  while (pos >= 0 && elements_[static_cast<std::size_t>(pos)] == n_ - k_ + pos) --pos;
  if (pos < 0) return false;
  ++elements_[static_cast<std::size_t>(pos)];
  for (int j = pos + 1; j < k_; ++j) {
    elements_[static_cast<std::size_t>(j)] = elements_[static_cast<std::size_t>(j - 1)] + 1;
  }
  mask_ = 0;
  for (int e : elements_) mask_ |= CellMask{1} << e;
  return true;
}

SupportEnumerator::SupportEnumerator(SampleSpace space, int m, const EnumerationLimits& limits)
    : space_(std::move(space)),
      total_(checked_subset_count(space_, m, limits)),
      cursor_(space_.total_cells(), m) {}

std::optional<SupportSet> SupportEnumerator::next() {
  if (emitted_ == total_) return std::nullopt;
  if (emitted_ > 0) cursor_.next();
  ++emitted_;
  return SupportSet::from_mask(space_, cursor_.mask());
}

}  // namespace wcc
