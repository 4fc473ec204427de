#pragma once

#include <string>
#include <string_view>

#include "wcc/support.hpp"

namespace wcc {

enum class TextFormat { kJson, kGrid };

// JSON: {"alphabet_size": q, "num_informants": N, "points": [[...], ...]}.
// Grid (N = 2 only): a "QxN" header line, then q rows of q characters where
// 'x' marks a present point and '.' an absent one; row = coordinate 0.
SupportSet parse_support(std::string_view text, TextFormat format,
                         int cell_cap = kDefaultCellCap);

// Points are written in ascending index order. Grid output for N != 2
// throws UnsupportedFormat.
std::string serialize_support(const SupportSet& s, TextFormat format);

// JSON if the first non-blank character is '{', grid otherwise.
TextFormat detect_format(std::string_view text);

}  // namespace wcc
