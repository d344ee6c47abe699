#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "domgame/graph.hpp"

namespace domgame {

/// Largest order representable by the single-byte graph6 header.
inline constexpr int kMaxGraph6Order = 62;

/// Decodes short-form graph6 (orders 0..62). Trailing newline/CR is tolerated.
/// Throws ParseError on a bad header, wrong payload length, or bytes outside 63..126.
Graph parse_graph6(std::string_view text);

/// Encodes `g` as graph6: header byte n+63, then the upper-triangle bits in
/// column order (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit
/// groups. Throws OrderLimitError above order 62.
std::string write_graph6(const Graph& g);

/// Edge-list text: "n m" header then m lines "u v" (0-based). Blank lines
/// and '#' comments are ignored. Throws ParseError.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace domgame
