#pragma once

#include <vector>

#include "wcc/support.hpp"

namespace wcc {

// A relabeling of the sample space: new coordinate j takes the value of old
// coordinate coord_perm[j], mapped through value_maps[j]. These relabelings
// preserve both worst-case costs of the identity target.
struct Relabeling {
  std::vector<int> coord_perm;
  std::vector<std::vector<Symbol>> value_maps;

  static Relabeling identity(const SampleSpace& space);
  // Throws InvalidPermutation if this is not a valid relabeling of space.
  void validate(const SampleSpace& space) const;
  Relabeling inverse() const;
  Point apply(const Point& p) const;
};

SupportSet apply_symmetry(const SupportSet& s, const Relabeling& relabeling);

// Least image of s (comparing ascending index tuples lexicographically) over
// all coordinate permutations composed with per-coordinate value bijections.
SupportSet canonical_form(const SupportSet& s);

// True iff a's ascending index tuple is lexicographically before b's.
// Both masks must have the same popcount.
inline bool lex_less(CellMask a, CellMask b) noexcept {
  const CellMask diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

}  // namespace wcc
