#include "domgame/enumerate.hpp"

#include <stdexcept>

#include "domgame/errors.hpp"

namespace domgame {

Edge pair_at(int index) {
  // Column j holds j pairs; find the column containing `index`.
  int j = 1;
  while (index >= j) {
    index -= j;
    ++j;
  }
  return Edge(index, j);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  const int pairs = pair_count(n);
  int index = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++index) {
      if ((mask >> index) & 1U) g.add_edge(i, j);
    }
  }
  if (pairs < 64 && (mask >> pairs) != 0) throw std::invalid_argument("edge mask has bits beyond C(n,2)");
  return g;
}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n, bool connected_only)
    : n_(n), connected_only_(connected_only) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  if (n > kMaxEnumeratedGraphOrder) {
    throw OrderLimitError("labeled graph enumeration", n, kMaxEnumeratedGraphOrder);
  }
  end_ = std::uint64_t{1} << pair_count(n);
}

std::optional<Graph> LabeledGraphEnumerator::next() {
  while (current_ < end_) {
    Graph g = graph_from_edge_mask(n_, current_++);
    if (!connected_only_ || is_connected(g)) return g;
  }
  return std::nullopt;
}

Graph tree_from_pruefer(int n, std::span<const VertexId> sequence) {
  if (n < 1) throw std::invalid_argument("tree order must be positive");
  Graph g(n);
  if (n == 1) return g;
  if (static_cast<int>(sequence.size()) != n - 2) {
    throw std::invalid_argument("Prüfer sequence must have length n-2");
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (VertexId v : sequence) {
    if (v < 0 || v >= n) throw std::invalid_argument("Prüfer entry out of range");
    ++degree[v];
  }
  for (VertexId v : sequence) {
    VertexId leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    g.add_edge(leaf, v);
    --degree[leaf];
    --degree[v];
  }
  VertexId a = -1;
  for (VertexId u = 0; u < n; ++u) {
    if (degree[u] != 1) continue;
    if (a < 0) {
      a = u;
    } else {
      g.add_edge(a, u);
      break;
    }
  }
  return g;
}

LabeledTreeEnumerator::LabeledTreeEnumerator(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("tree order must be positive");
  if (n > kMaxEnumeratedTreeOrder) throw OrderLimitError("labeled tree enumeration", n, kMaxEnumeratedTreeOrder);
  sequence_.assign(static_cast<std::size_t>(n >= 2 ? n - 2 : 0), 0);
}

std::optional<Graph> LabeledTreeEnumerator::next() {
  if (done_) return std::nullopt;
  Graph tree = tree_from_pruefer(n_, sequence_);
  // Odometer increment; rolls over exactly once after the last sequence.
  std::size_t i = sequence_.size();
  while (i > 0) {
    --i;
    if (++sequence_[i] < n_) break;
    sequence_[i] = 0;
    if (i == 0) done_ = true;
  }
  if (sequence_.empty()) done_ = true;
  return tree;
}

std::uint64_t LabeledTreeEnumerator::total() const {
  std::uint64_t count = 1;
  for (int i = 0; i + 2 < n_; ++i) count *= static_cast<std::uint64_t>(n_);
  return count;
}

std::vector<Graph> labeled_graphs(int n, bool connected_only) {
  LabeledGraphEnumerator it(n, connected_only);
  std::vector<Graph> out;
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

std::vector<Graph> labeled_trees(int n) {
  LabeledTreeEnumerator it(n);
  std::vector<Graph> out;
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace domgame
