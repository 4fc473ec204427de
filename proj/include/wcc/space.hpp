#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace wcc {

using Symbol = int;
using Point = std::vector<Symbol>;

// One bit per cell of the sample space, bit k <-> lexicographic index k.
using CellMask = std::uint64_t;

inline constexpr int kDefaultCellCap = 32;
inline constexpr int kMaxCells = 64;

// The universe of q^N cells for N informants over the alphabet 0..q-1.
// Cells are indexed lexicographically with coordinate 0 most significant.
class SampleSpace {
 public:
  int alphabet_size() const noexcept { return q_; }
  int num_informants() const noexcept { return n_; }
  int total_cells() const noexcept { return cells_; }

  CellMask full_mask() const noexcept {
    return cells_ == 64 ? ~CellMask{0} : (CellMask{1} << cells_) - 1;
  }

  // Cells whose coordinate `informant` equals `value`. Unchecked.
  CellMask slice(int informant, Symbol value) const noexcept {
    return (*slices_)[static_cast<std::size_t>(informant * q_ + value)];
  }

  Symbol coordinate(int cell, int informant) const noexcept;

  bool is_valid(const Point& p) const noexcept;
  int index_of(const Point& p) const;  // throws InvalidSymbol
  Point point_at(int index) const;     // throws IndexOutOfRange

  // "QxN", e.g. "5x2".
  std::string label() const;

  friend bool operator==(const SampleSpace& a, const SampleSpace& b) noexcept {
    return a.q_ == b.q_ && a.n_ == b.n_;
  }

 private:
  friend SampleSpace make_space(int q, int n, int cell_cap);
  SampleSpace(int q, int n, int cells);

  int q_ = 0;
  int n_ = 0;
  int cells_ = 0;
  std::vector<int> place_value_;  // q^(N-1-i)
  std::shared_ptr<const std::vector<CellMask>> slices_;
};

// Throws InvalidSpace unless q >= 2, n >= 1 and q^n <= cell_cap (<= 64).
SampleSpace make_space(int q, int n, int cell_cap = kDefaultCellCap);

// Parses "QxN" (e.g. "5x2"); throws ParseError / InvalidSpace.
struct SpaceDimensions {
  int q = 0;
  int n = 0;
};

// Reads "QxN" without validating the dimensions.
SpaceDimensions parse_dimensions(const std::string& label);
SampleSpace parse_space(const std::string& label, int cell_cap = kDefaultCellCap);

}  // namespace wcc
