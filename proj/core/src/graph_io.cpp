#include "domgame/graph_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

constexpr int kGraph6Offset = 63;

std::size_t payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

std::string_view strip_line_end(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip_line_end(text);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) +
                       " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kGraph6Offset;
  if (n > kMaxGraph6Order) {
    throw ParseError("graph6: long-form order header is not supported");
  }
  const std::size_t expected = payload_bytes(n);
  if (text.size() - 1 != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " payload bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(text.size() - 1));
  }

  Graph g(n);
  std::size_t bit = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++bit) {
      const int group = static_cast<unsigned char>(text[1 + bit / 6]) - kGraph6Offset;
      if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  for (; bit < expected * 6; ++bit) {
    const int group = static_cast<unsigned char>(text[1 + bit / 6]) - kGraph6Offset;
    if ((group >> (5 - bit % 6)) & 1) throw ParseError("graph6: non-zero padding bits");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw OrderLimitError("graph6", n, kMaxGraph6Order);
  std::string out(1 + payload_bytes(n), static_cast<char>(kGraph6Offset));
  out[0] = static_cast<char>(n + kGraph6Offset);
  std::size_t bit = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::string> lines;
  std::vector<int> line_numbers;
  std::string raw;
  for (int number = 1; std::getline(in, raw); ++number) {
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    lines.emplace_back(line);
    line_numbers.push_back(number);
  }
  if (lines.empty()) throw ParseError("edge list: missing \"n m\" header");

  auto fail = [&](std::size_t idx, const std::string& why) {
    return ParseError("edge list line " + std::to_string(line_numbers[idx]) + ": " + why);
  };
  auto read_pair = [&](std::size_t idx, long long& a, long long& b) {
    std::istringstream is(lines[idx]);
    std::string extra;
    if (!(is >> a >> b) || (is >> extra)) throw fail(idx, "expected two integers");
  };

  long long n = 0;
  long long m = 0;
  read_pair(0, n, m);
  if (n < 0 || n > kMaxVertices) throw fail(0, "order out of range");
  if (m < 0) throw fail(0, "negative edge count");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("edge list: header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }

  Graph g(static_cast<int>(n));
  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    long long u = 0;
    long long v = 0;
    read_pair(idx, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail(idx, "vertex out of range");
    if (u == v) throw fail(idx, "self-loop");
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return g;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (Edge e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace domgame
