#pragma once

#include <compare>
#include <vector>

#include "domgame/vertex_set.hpp"

namespace domgame {

/// Unordered vertex pair; normalized so that `u < v`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  constexpr Edge() = default;
  constexpr Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..order()-1, stored as one neighborhood
/// bitset per vertex. Supports up to kMaxVertices vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const;

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet neighbors(VertexId v) const { return adjacency_.at(v); }
  VertexSet closed_neighborhood(VertexId v) const {
    return adjacency_.at(v) | VertexSet::single(v);
  }
  int degree(VertexId v) const { return neighbors(v).size(); }
  bool has_edge(VertexId a, VertexId b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  /// Idempotent. Throws std::invalid_argument for self-loops and
  /// std::out_of_range for endpoints outside the vertex range.
  Graph& add_edge(Edge e);
  Graph& add_edge(VertexId a, VertexId b) { return add_edge(Edge(a, b)); }
  /// Throws std::invalid_argument when the edge is absent.
  Graph& remove_edge(Edge e);

  /// Appends an isolated vertex and returns its id.
  VertexId add_vertex();

  /// Symmetric, loop-free, in-range adjacency.
  bool is_valid() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(VertexId v) const;

  std::vector<VertexSet> adjacency_;
};

Graph new_graph(int order);
Graph with_edge(Graph g, Edge e);
Graph without_edge(Graph g, Edge e);

/// Result of deleting a vertex: vertices above the removed one shift down by one.
struct VertexRemoval {
  Graph graph;
  /// relabel[old] is the new id, or -1 for the removed vertex.
  std::vector<VertexId> relabel;
};

VertexRemoval remove_vertex(const Graph& g, VertexId v);

bool is_connected(const Graph& g);

}  // namespace domgame
