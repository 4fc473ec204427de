#include "wcc/support.hpp"

#include "wcc/error.hpp"

namespace wcc {

ConsistentSet::ConsistentSet(SampleSpace space, CellMask mask)
    : space_(std::move(space)), mask_(mask) {
  if ((mask_ & ~space_.full_mask()) != 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "mask has cells outside " + space_.label());
  }
}

bool ConsistentSet::contains(const Point& p) const {
  if (!space_.is_valid(p)) return false;
  return (mask_ >> space_.index_of(p)) & 1U;
}

std::vector<int> ConsistentSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_cell(mask_, [&](int cell) { out.push_back(cell); });
  return out;
}

std::vector<Point> ConsistentSet::points() const {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_cell(mask_, [&](int cell) { out.push_back(space_.point_at(cell)); });
  return out;
}

SupportSet SupportSet::from_points(const SampleSpace& space, const std::vector<Point>& points) {
  if (points.empty()) throw Error(ErrorCode::kEmptySupport, "support set has no points");
  CellMask mask = 0;
  for (const Point& p : points) {
    const CellMask bit = CellMask{1} << space.index_of(p);
    if ((mask & bit) != 0) throw Error(ErrorCode::kDuplicatePoint, "point listed twice");
    mask |= bit;
  }
  return SupportSet(space, mask);
}

SupportSet SupportSet::from_mask(const SampleSpace& space, CellMask mask) {
  if (mask == 0) throw Error(ErrorCode::kEmptySupport, "support set has no points");
  if ((mask & ~space.full_mask()) != 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "mask has cells outside " + space.label());
  }
  return SupportSet(space, mask);
}

std::vector<Symbol> project(const ConsistentSet& s, int informant) {
  const SampleSpace& space = s.space();
  if (informant < 0 || informant >= space.num_informants()) {
    throw Error(ErrorCode::kIndexOutOfRange, "informant " + std::to_string(informant));
  }
  std::vector<Symbol> values;
  for (Symbol v = 0; v < space.alphabet_size(); ++v) {
    if ((s.mask() & space.slice(informant, v)) != 0) values.push_back(v);
  }
  return values;
}

ConsistentSet condition(const ConsistentSet& s, int informant, Symbol value) {
  const SampleSpace& space = s.space();
  if (informant < 0 || informant >= space.num_informants()) {
    throw Error(ErrorCode::kIndexOutOfRange, "informant " + std::to_string(informant));
  }
  if (value < 0 || value >= space.alphabet_size()) {
    throw Error(ErrorCode::kInvalidSymbol, "symbol " + std::to_string(value));
  }
  return ConsistentSet(space, s.mask() & space.slice(informant, value));
}

}  // namespace wcc
