#pragma once

#include <bit>
#include <cstdint>
#include <string_view>
#include <vector>

#include "wcc/space.hpp"

namespace wcc {

// What the sink must learn about the data vector.
enum class FunctionKind {
  kIdentity,   // the whole vector (distributed source coding)
  kBitwiseOr,  // OR of the informants' values in standard binary
};

std::string_view to_string(FunctionKind kind);
// Accepts "identity", "bitor" and "bitwise_or"; throws InvalidArgument.
FunctionKind parse_function(std::string_view text);

// Target output for one point. For identity this is the point's cell index,
// for bitwise OR the OR of its coordinates (width ceil_log2(q) bits).
std::uint32_t evaluate(FunctionKind kind, const SampleSpace& space, const Point& p);

// Precomputed output classes of a target function over one space.
class TargetTable {
 public:
  TargetTable(const SampleSpace& space, FunctionKind kind);

  FunctionKind kind() const noexcept { return kind_; }
  std::uint32_t value(int cell) const noexcept { return values_[static_cast<std::size_t>(cell)]; }

  // True iff the function takes one value on the nonempty mask.
  bool is_constant(CellMask mask) const noexcept {
    const CellMask cls = class_of_cell_[static_cast<std::size_t>(std::countr_zero(mask))];
    return (mask & ~cls) == 0;
  }

  int distinct_values(CellMask mask) const noexcept;

 private:
  FunctionKind kind_;
  std::vector<std::uint32_t> values_;
  std::vector<CellMask> class_of_cell_;
  std::vector<CellMask> classes_;
};

}  // namespace wcc
