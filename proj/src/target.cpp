#include "wcc/target.hpp"

#include <bit>
#include <map>
#include <string>

#include "wcc/error.hpp"

namespace wcc {

std::string_view to_string(FunctionKind kind) {
  return kind == FunctionKind::kIdentity ? "identity" : "bitor";
}

FunctionKind parse_function(std::string_view text) {
  if (text == "identity") return FunctionKind::kIdentity;
  if (text == "bitor" || text == "bitwise_or") return FunctionKind::kBitwiseOr;
  throw Error(ErrorCode::kInvalidArgument, "unknown function '" + std::string(text) + "'");
}

std::uint32_t evaluate(FunctionKind kind, const SampleSpace& space, const Point& p) {
  if (kind == FunctionKind::kIdentity) return static_cast<std::uint32_t>(space.index_of(p));
  if (!space.is_valid(p)) throw Error(ErrorCode::kInvalidSymbol, "point outside " + space.label());
  std::uint32_t out = 0;
  for (Symbol s : p) out |= static_cast<std::uint32_t>(s);
  return out;
}

TargetTable::TargetTable(const SampleSpace& space, FunctionKind kind) : kind_(kind) {
  const int cells = space.total_cells();
  values_.resize(static_cast<std::size_t>(cells));
  std::map<std::uint32_t, CellMask> by_value;
  for (int cell = 0; cell < cells; ++cell) {
    values_[static_cast<std::size_t>(cell)] = evaluate(kind, space, space.point_at(cell));
    by_value[values_[static_cast<std::size_t>(cell)]] |= CellMask{1} << cell;
  }
  class_of_cell_.resize(static_cast<std::size_t>(cells));
  for (int cell = 0; cell < cells; ++cell) {
    class_of_cell_[static_cast<std::size_t>(cell)] = by_value[values_[static_cast<std::size_t>(cell)]];
  }
  for (const auto& [value, mask] : by_value) classes_.push_back(mask);
}

int TargetTable::distinct_values(CellMask mask) const noexcept {
  if (kind_ == FunctionKind::kIdentity) return std::popcount(mask);
  int count = 0;
  for (CellMask cls : classes_) {
    if ((cls & mask) != 0) ++count;
  }
  return count;
}

}  // namespace wcc
