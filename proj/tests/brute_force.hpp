#pragma once

// Test-only reference oracles. They work on explicit point sets and share no
// code with the bitmask implementation they check.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace wcc::testing {

using PointSet = std::set<std::vector<int>>;

inline int ref_ceil_log2(std::int64_t k) {
  int b = 0;
  while ((std::int64_t{1} << b) < k) ++b;
  return b;
}

inline unsigned ref_or(const std::vector<int>& p) {
  unsigned out = 0;
  for (int v : p) out |= static_cast<unsigned>(v);
  return out;
}

// Target output as a vector so identity and OR share one code path.
inline std::vector<int> ref_target(bool bitwise_or, const std::vector<int>& p) {
  if (bitwise_or) return {static_cast<int>(ref_or(p))};
  return p;
}

inline bool ref_constant(bool bitwise_or, const PointSet& s) {
  std::set<std::vector<int>> outputs;
  for (const auto& p : s) outputs.insert(ref_target(bitwise_or, p));
  return outputs.size() <= 1;
}

// Block-serial cost: bits when count_bits, informants otherwise.
inline int ref_block_serial(const PointSet& s, int n, bool bitwise_or, bool count_bits) {
  if (ref_constant(bitwise_or, s)) return 0;
  int best = INT_MAX;
  for (int i = 0; i < n; ++i) {
    std::map<int, PointSet> parts;
    for (const auto& p : s) parts[p[static_cast<std::size_t>(i)]].insert(p);
    if (parts.size() < 2) continue;
    const int step = count_bits ? ref_ceil_log2(static_cast<std::int64_t>(parts.size())) : 1;
    int worst = 0;
    for (const auto& [v, part] : parts) {
      worst = std::max(worst, ref_block_serial(part, n, bitwise_or, count_bits));
    }
    best = std::min(best, step + worst);
  }
  return best;
}

// Bit-adaptive cost: one membership bit per question.
inline int ref_bit_adaptive(const PointSet& s, int n, bool bitwise_or,
                            std::map<PointSet, int>& memo) {
  if (ref_constant(bitwise_or, s)) return 0;
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  int best = INT_MAX;
  for (int i = 0; i < n; ++i) {
    std::vector<int> values;
    for (const auto& p : s) values.push_back(p[static_cast<std::size_t>(i)]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const std::size_t k = values.size();
    for (std::uint64_t t = 1; t + 1 < (std::uint64_t{1} << k); ++t) {
      PointSet yes;
      PointSet no;
      for (const auto& p : s) {
        const auto pos = std::lower_bound(values.begin(), values.end(), p[static_cast<std::size_t>(i)]) -
                         values.begin();
        ((t >> pos) & 1U ? yes : no).insert(p);
      }
      best = std::min(best, 1 + std::max(ref_bit_adaptive(yes, n, bitwise_or, memo),
                                         ref_bit_adaptive(no, n, bitwise_or, memo)));
    }
  }
  memo[s] = best;
  return best;
}

inline int ref_bit_adaptive(const PointSet& s, int n, bool bitwise_or) {
  std::map<PointSet, int> memo;
  return ref_bit_adaptive(s, n, bitwise_or, memo);
}

// All N-tuples over 0..q-1 in lexicographic order.
inline std::vector<std::vector<int>> ref_cells(int q, int n) {
  std::vector<std::vector<int>> cells;
  std::vector<int> p(static_cast<std::size_t>(n), 0);
  for (;;) {
    cells.push_back(p);
    int j = n - 1;
    while (j >= 0 && ++p[static_cast<std::size_t>(j)] == q) p[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
  }
  return cells;
}

// Pascal's triangle in 64 bits.
inline std::uint64_t ref_binomial(int n, int k) {
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) {
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
  }
  return k < 0 || k > n ? 0 : t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Orbit of a point set under coordinate transpositions and per-coordinate
// value transpositions (which generate the full relabeling group), by BFS.
inline std::set<PointSet> ref_orbit(const PointSet& start, int q, int n) {
  std::set<PointSet> seen{start};
  std::vector<PointSet> frontier{start};
  while (!frontier.empty()) {
    PointSet s = frontier.back();
    frontier.pop_back();
    std::vector<PointSet> next;
    for (int i = 0; i + 1 < n; ++i) {
      PointSet image;
      for (auto p : s) {
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
        image.insert(p);
      }
      next.push_back(image);
    }
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a + 1 < q; ++a) {
        PointSet image;
        for (auto p : s) {
          int& v = p[static_cast<std::size_t>(i)];
          if (v == a) v = a + 1;
          else if (v == a + 1) v = a;
          image.insert(p);
        }
        next.push_back(image);
      }
    }
    for (auto& image : next) {
      if (seen.insert(image).second) frontier.push_back(std::move(image));
    }
  }
  return seen;
}

}  // namespace wcc::testing
