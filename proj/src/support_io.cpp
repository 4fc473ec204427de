#include "wcc/support_io.hpp"

#include <json.hpp>
#include <sstream>

#include "wcc/error.hpp"

namespace wcc {
namespace {

using nlohmann::json;

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw Error(ErrorCode::kParseError, std::string("missing integer field '") + key + "'");
  }
  return doc[key].get<int>();
}

SupportSet parse_json(std::string_view text, int cell_cap) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParseError, "expected a JSON object");
  const SampleSpace space =
      make_space(require_int(doc, "alphabet_size"), require_int(doc, "num_informants"), cell_cap);
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw Error(ErrorCode::kParseError, "missing array field 'points'");
  }
  std::vector<Point> points;
  for (const json& entry : doc["points"]) {
    if (!entry.is_array()) throw Error(ErrorCode::kParseError, "point must be an array");
    Point p;
    for (const json& coord : entry) {
      if (!coord.is_number_integer()) {
        throw Error(ErrorCode::kParseError, "coordinates must be integers");
      }
      p.push_back(coord.get<int>());
    }
    if (static_cast<int>(p.size()) != space.num_informants()) {
      throw Error(ErrorCode::kParseError, "point has " + std::to_string(p.size()) +
                                              " coordinates, expected " +
                                              std::to_string(space.num_informants()));
    }
    points.push_back(std::move(p));
  }
  return SupportSet::from_points(space, points);
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

SupportSet parse_grid(std::string_view text, int cell_cap) {
  const std::vector<std::string> lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kParseError, "empty grid input");
  const SampleSpace space = parse_space(lines.front(), cell_cap);
  if (space.num_informants() != 2) {
    throw Error(ErrorCode::kUnsupportedFormat, "grid format needs N = 2");
  }
  const int q = space.alphabet_size();
  if (static_cast<int>(lines.size()) != q + 1) {
    throw Error(ErrorCode::kParseError,
                "grid needs " + std::to_string(q) + " rows after the header");
  }
  std::vector<Point> points;
  for (int row = 0; row < q; ++row) {
    const std::string& line = lines[static_cast<std::size_t>(row + 1)];
    if (static_cast<int>(line.size()) != q) {
      throw Error(ErrorCode::kParseError, "grid row " + std::to_string(row) + " must have " +
                                              std::to_string(q) + " characters");
    }
    for (int col = 0; col < q; ++col) {
      const char c = line[static_cast<std::size_t>(col)];
      if (c == 'x') {
        points.push_back({row, col});
      } else if (c != '.') {
        throw Error(ErrorCode::kParseError, std::string("unexpected grid character '") + c + "'");
      }
    }
  }
  return SupportSet::from_points(space, points);
}

}  // namespace

TextFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? TextFormat::kJson : TextFormat::kGrid;
  }
  return TextFormat::kGrid;
}

SupportSet parse_support(std::string_view text, TextFormat format, int cell_cap) {
  return format == TextFormat::kJson ? parse_json(text, cell_cap) : parse_grid(text, cell_cap);
}

std::string serialize_support(const SupportSet& s, TextFormat format) {
  const SampleSpace& space = s.space();
  if (format == TextFormat::kJson) {
    json doc;
    doc["alphabet_size"] = space.alphabet_size();
    doc["num_informants"] = space.num_informants();
    doc["points"] = s.points();
    return doc.dump();
  }
  if (space.num_informants() != 2) {
    throw Error(ErrorCode::kUnsupportedFormat, "grid format needs N = 2, got " + space.label());
  }
  const int q = space.alphabet_size();
  std::ostringstream out;
  out << space.label() << '\n';
  for (int row = 0; row < q; ++row) {
    for (int col = 0; col < q; ++col) {
      out << (((s.mask() >> (row * q + col)) & 1U) ? 'x' : '.');
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace wcc
