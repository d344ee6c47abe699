#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

inline constexpr int kMaxEnumeratedGraphOrder = 7;
inline constexpr int kMaxEnumeratedTreeOrder = 8;

/// Number of vertex pairs C(n, 2).
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Pair index in graph6 column order: (0,1)=0, (0,2)=1, (1,2)=2, (0,3)=3, ...
Edge pair_at(int index);

/// Graph whose edge set is the set bits of `mask` under pair_at numbering.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// All 2^C(n,2) labeled graphs on n vertices in ascending edge-mask order,
/// optionally filtered to connected ones. Single consumer.
class LabeledGraphEnumerator {
 public:
  /// Throws OrderLimitError for n > kMaxEnumeratedGraphOrder and
  /// std::invalid_argument for negative n.
  LabeledGraphEnumerator(int n, bool connected_only);

  std::optional<Graph> next();
  /// Mask of the graph most recently returned by next().
  std::uint64_t mask() const { return current_ - 1; }
  std::uint64_t total_masks() const { return end_; }

 private:
  int n_;
  bool connected_only_;
  std::uint64_t current_ = 0;
  std::uint64_t end_;
};

/// Tree with the given Prüfer sequence (length n-2, entries in [0, n)).
Graph tree_from_pruefer(int n, std::span<const VertexId> sequence);

/// All n^(n-2) labeled trees on n vertices (one tree for n = 1, 2), ordered by
/// Prüfer sequence in lexicographic order. Single consumer.
class LabeledTreeEnumerator {
 public:
  /// Throws OrderLimitError for n > kMaxEnumeratedTreeOrder and
  /// std::invalid_argument for n < 1.
  explicit LabeledTreeEnumerator(int n);

  std::optional<Graph> next();
  std::uint64_t total() const;

 private:
  int n_;
  std::vector<VertexId> sequence_;
  bool done_ = false;
};

/// Convenience wrappers that drain the enumerators.
std::vector<Graph> labeled_graphs(int n, bool connected_only);
std::vector<Graph> labeled_trees(int n);

}  // namespace domgame
