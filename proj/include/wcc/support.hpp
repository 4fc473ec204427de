#pragma once

#include <bit>
#include <vector>

#include "wcc/space.hpp"

namespace wcc {

// Calls fn(cell) for every set bit of mask, lowest first.
template <typename Fn>
void for_each_cell(CellMask mask, Fn&& fn) {
  while (mask != 0) {
    fn(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

// A subset of a sample space, possibly empty. This is the oracle recursion
// state: the points still compatible with every answer received so far.
class ConsistentSet {
 public:
  ConsistentSet(SampleSpace space, CellMask mask);

  const SampleSpace& space() const noexcept { return space_; }
  CellMask mask() const noexcept { return mask_; }
  int size() const noexcept { return std::popcount(mask_); }
  bool empty() const noexcept { return mask_ == 0; }

  bool contains(const Point& p) const;
  // Ascending by lexicographic index.
  std::vector<int> indices() const;
  std::vector<Point> points() const;

  friend bool operator==(const ConsistentSet& a, const ConsistentSet& b) noexcept {
    return a.space_ == b.space_ && a.mask_ == b.mask_;
  }

 protected:
  SampleSpace space_;
  CellMask mask_;
};

// A nonempty support set: the positive-probability points of a distribution.
class SupportSet : public ConsistentSet {
 public:
  // Throws EmptySupport, DuplicatePoint or InvalidSymbol.
  static SupportSet from_points(const SampleSpace& space, const std::vector<Point>& points);
  // Throws EmptySupport, IndexOutOfRange for bits outside the space.
  static SupportSet from_mask(const SampleSpace& space, CellMask mask);
  static SupportSet full(const SampleSpace& space) { return from_mask(space, space.full_mask()); }

 private:
  SupportSet(SampleSpace space, CellMask mask) : ConsistentSet(std::move(space), mask) {}
};

// Sorted values taken by informant i over the set (empty iff the set is).
std::vector<Symbol> project(const ConsistentSet& s, int informant);

// Points of s whose coordinate i equals value.
ConsistentSet condition(const ConsistentSet& s, int informant, Symbol value);

// Mask-level helpers used in the hot paths.
namespace mask_ops {

inline int projection_size(const SampleSpace& space, CellMask mask, int informant) {
  int count = 0;
  for (Symbol v = 0; v < space.alphabet_size(); ++v) {
    if ((mask & space.slice(informant, v)) != 0) ++count;
  }
  return count;
}

}  // namespace mask_ops

}  // namespace wcc
