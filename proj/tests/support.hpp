#pragma once

// Small reference implementations the tests compare the library against.
// They share nothing with the solver beyond the Graph type.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "domgame/graph.hpp"

namespace testsupport {

inline int ceil_half(int n) { return (n + 1) / 2; }

// Closed forms for paths and cycles, n >= 3.
inline int path_gg(int n) { return n % 4 == 3 ? ceil_half(n) - 1 : ceil_half(n); }
inline int path_ggp(int n) { return ceil_half(n); }
inline int cycle_gg(int n) { return path_gg(n); }
inline int cycle_ggp(int n) { return n % 4 == 2 ? ceil_half(n - 1) - 1 : ceil_half(n - 1); }

inline std::vector<std::uint64_t> closed_masks(const domgame::Graph& g) {
  std::vector<std::uint64_t> out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    out[v] = std::uint64_t{1} << v;
    for (int u = 0; u < g.order(); ++u) {
      if (g.has_edge(u, v)) out[v] |= std::uint64_t{1} << u;
    }
  }
  return out;
}

inline std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Unmemoized minimax straight from the definition.
inline int naive_value(const std::vector<std::uint64_t>& nbhd, std::uint64_t dominated, bool dominator) {
  const std::uint64_t all = full_mask(static_cast<int>(nbhd.size()));
  if (dominated == all) return 0;
  int best = dominator ? 1 << 20 : -1;
  for (std::size_t v = 0; v < nbhd.size(); ++v) {
    if ((nbhd[v] & ~dominated) == 0) continue;
    const int r = 1 + naive_value(nbhd, dominated | nbhd[v], !dominator);
    best = dominator ? std::min(best, r) : std::max(best, r);
  }
  return best;
}

inline int naive_value(const domgame::Graph& g, std::uint64_t dominated, bool dominator) {
  return naive_value(closed_masks(g), dominated, dominator);
}

// Smallest k such that some k-subset dominates, by plain subset enumeration.
inline int naive_domination_number(const domgame::Graph& g) {
  const int n = g.order();
  const auto nbhd = closed_masks(g);
  int best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size >= best) continue;
    std::uint64_t covered = 0;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) covered |= nbhd[v];
    }
    if (covered == full_mask(n)) best = size;
  }
  return best;
}

inline domgame::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  domgame::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::uint64_t random_subset(std::mt19937_64& rng, int n) {
  return n == 0 ? 0 : rng() & full_mask(n);
}

}  // namespace testsupport
