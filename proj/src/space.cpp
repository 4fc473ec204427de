#include "wcc/space.hpp"

#include <charconv>

#include "wcc/error.hpp"

namespace wcc {

SampleSpace::SampleSpace(int q, int n, int cells) : q_(q), n_(n), cells_(cells) {
  place_value_.assign(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) {
    place_value_[static_cast<std::size_t>(i)] = place_value_[static_cast<std::size_t>(i + 1)] * q;
  }
  auto slices = std::make_shared<std::vector<CellMask>>(static_cast<std::size_t>(n * q), 0);
  for (int cell = 0; cell < cells; ++cell) {
    for (int i = 0; i < n; ++i) {
      (*slices)[static_cast<std::size_t>(i * q + coordinate(cell, i))] |= CellMask{1} << cell;
    }
  }
  slices_ = std::move(slices);
}

Symbol SampleSpace::coordinate(int cell, int informant) const noexcept {
  return (cell / place_value_[static_cast<std::size_t>(informant)]) % q_;
}

bool SampleSpace::is_valid(const Point& p) const noexcept {
  if (static_cast<int>(p.size()) != n_) return false;
  for (Symbol s : p) {
    if (s < 0 || s >= q_) return false;
  }
  return true;
}

int SampleSpace::index_of(const Point& p) const {
  if (!is_valid(p)) {
    throw Error(ErrorCode::kInvalidSymbol, "point is not a valid " + label() + " point");
  }
  int index = 0;
  for (int i = 0; i < n_; ++i) index += p[static_cast<std::size_t>(i)] * place_value_[static_cast<std::size_t>(i)];
  return index;
}

Point SampleSpace::point_at(int index) const {
  if (index < 0 || index >= cells_) {
    throw Error(ErrorCode::kIndexOutOfRange, "cell index " + std::to_string(index));
  }
  Point p(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) p[static_cast<std::size_t>(i)] = coordinate(index, i);
  return p;
}

std::string SampleSpace::label() const {
  return std::to_string(q_) + "x" + std::to_string(n_);
}

SampleSpace make_space(int q, int n, int cell_cap) {
  if (cell_cap > kMaxCells) cell_cap = kMaxCells;
  if (q < 2 || n < 1) {
    throw Error(ErrorCode::kInvalidSpace,
                "need alphabet size >= 2 and at least one informant, got q=" +
                    std::to_string(q) + " N=" + std::to_string(n));
  }
  long long cells = 1;
  for (int i = 0; i < n; ++i) {
    cells *= q;
    if (cells > cell_cap) {
      throw Error(ErrorCode::kInvalidSpace, std::to_string(q) + "^" + std::to_string(n) +
                                                " cells exceeds the cell cap of " +
                                                std::to_string(cell_cap));
    }
  }
  return SampleSpace(q, n, static_cast<int>(cells));
}

SpaceDimensions parse_dimensions(const std::string& label) {
  const auto sep = label.find_first_of("xX");
  int q = 0;
  int n = 0;
  auto parse_int = [](std::string_view text, int& out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size() && !text.empty();
  };
  if (sep == std::string::npos ||
      !parse_int(std::string_view(label).substr(0, sep), q) ||
      !parse_int(std::string_view(label).substr(sep + 1), n)) {
    throw Error(ErrorCode::kParseError, "expected space as QxN, got '" + label + "'");
  }
  return {q, n};
}

SampleSpace parse_space(const std::string& label, int cell_cap) {
  const SpaceDimensions d = parse_dimensions(label);
  return make_space(d.q, d.n, cell_cap);
}

}  // namespace wcc
