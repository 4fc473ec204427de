#include "wcc/symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "wcc/error.hpp"

namespace wcc {
namespace {

bool is_permutation_of_range(const std::vector<int>& values, int size) {
  if (static_cast<int>(values.size()) != size) return false;
  std::vector<bool> seen(static_cast<std::size_t>(size), false);
  for (int v : values) {
    if (v < 0 || v >= size || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<int> invert(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  return inv;
}

}  // namespace

Relabeling Relabeling::identity(const SampleSpace& space) {
  Relabeling r;
  r.coord_perm.resize(static_cast<std::size_t>(space.num_informants()));
  std::iota(r.coord_perm.begin(), r.coord_perm.end(), 0);
  std::vector<Symbol> id(static_cast<std::size_t>(space.alphabet_size()));
  std::iota(id.begin(), id.end(), 0);
  r.value_maps.assign(static_cast<std::size_t>(space.num_informants()), id);
  return r;
}

void Relabeling::validate(const SampleSpace& space) const {
  if (!is_permutation_of_range(coord_perm, space.num_informants())) {
    throw Error(ErrorCode::kInvalidPermutation, "coordinate permutation is not a bijection");
  }
  if (static_cast<int>(value_maps.size()) != space.num_informants()) {
    throw Error(ErrorCode::kInvalidPermutation, "need one value map per informant");
  }
  for (const auto& map : value_maps) {
    if (!is_permutation_of_range(map, space.alphabet_size())) {
      throw Error(ErrorCode::kInvalidPermutation, "value map is not a bijection");
    }
  }
}

Relabeling Relabeling::inverse() const {
  Relabeling r;
  r.coord_perm = invert(coord_perm);
  r.value_maps.resize(value_maps.size());
  for (std::size_t i = 0; i < r.coord_perm.size(); ++i) {
    r.value_maps[i] = invert(value_maps[static_cast<std::size_t>(r.coord_perm[i])]);
  }
  return r;
}

Point Relabeling::apply(const Point& p) const {
  Point out(p.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = value_maps[j][static_cast<std::size_t>(p[static_cast<std::size_t>(coord_perm[j])])];
  }
  return out;
}

SupportSet apply_symmetry(const SupportSet& s, const Relabeling& relabeling) {
  const SampleSpace& space = s.space();
  relabeling.validate(space);
  CellMask image = 0;
  for (const Point& p : s.points()) image |= CellMask{1} << space.index_of(relabeling.apply(p));
  return SupportSet::from_mask(space, image);
}

SupportSet canonical_form(const SupportSet& s) {
  const SampleSpace& space = s.space();
  const int n = space.num_informants();
  const int q = space.alphabet_size();
  const std::vector<Point> points = s.points();

  std::vector<std::vector<Symbol>> all_bijections;
  {
    std::vector<Symbol> map(static_cast<std::size_t>(q));
    std::iota(map.begin(), map.end(), 0);
    do {
      all_bijections.push_back(map);
    } while (std::next_permutation(map.begin(), map.end()));
  }
  std::vector<int> place(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) place[static_cast<std::size_t>(i)] = place[static_cast<std::size_t>(i + 1)] * q;

  CellMask best = s.mask();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> choice(static_cast<std::size_t>(n));
  do {
    std::fill(choice.begin(), choice.end(), 0);
    // Odometer over one bijection per coordinate.
    for (;;) {
      CellMask image = 0;
      for (const Point& p : points) {
        int index = 0;
        for (int j = 0; j < n; ++j) {
          const auto& map = all_bijections[choice[static_cast<std::size_t>(j)]];
          index += map[static_cast<std::size_t>(p[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])])] *
                   place[static_cast<std::size_t>(j)];
        }
        image |= CellMask{1} << index;
      }
      if (lex_less(image, best)) best = image;
      int j = n - 1;
      while (j >= 0 && ++choice[static_cast<std::size_t>(j)] == all_bijections.size()) {
        choice[static_cast<std::size_t>(j)] = 0;
        --j;
      }
      if (j < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SupportSet::from_mask(space, best);
}

}  // namespace wcc
