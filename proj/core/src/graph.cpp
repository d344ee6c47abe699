#include "domgame/graph.hpp"

#include "domgame/errors.hpp"

#include <stdexcept>
#include <string>

namespace domgame {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (VertexId v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

Graph::Graph(int order) {
  if (order < 0) throw std::invalid_argument("graph order must be non-negative");
  if (order > kMaxVertices) {
    throw OrderLimitError("graph order " + std::to_string(order) + " exceeds " + std::to_string(kMaxVertices), order,
                          kMaxVertices);
  }
  adjacency_.resize(static_cast<std::size_t>(order));
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet row : adjacency_) twice += row.size();
  return twice / 2;
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order()));
  }
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  check_vertex(a);
  check_vertex(b);
  return adjacency_[a].contains(b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : adjacency_[u] - VertexSet::full(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

Graph& Graph::add_edge(Edge e) {
  if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
  check_vertex(e.u);
  check_vertex(e.v);
  adjacency_[e.u].insert(e.v);
  adjacency_[e.v].insert(e.u);
  return *this;
}

Graph& Graph::remove_edge(Edge e) {
  if (e.u == e.v || !has_edge(e)) {
    throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                " is not present");
  }
  adjacency_[e.u].erase(e.v);
  adjacency_[e.v].erase(e.u);
  return *this;
}

VertexId Graph::add_vertex() {
  if (order() >= kMaxVertices) {
    throw std::invalid_argument("graph order cannot exceed " + std::to_string(kMaxVertices));
  }
  adjacency_.emplace_back();
  return order() - 1;
}

bool Graph::is_valid() const {
  const VertexSet all = vertices();
  for (VertexId u = 0; u < order(); ++u) {
    const VertexSet row = adjacency_[u];
    if (row.contains(u) || !row.subset_of(all)) return false;
    for (VertexId v : row) {
      if (!adjacency_[v].contains(u)) return false;
    }
  }
  return true;
}

Graph new_graph(int order) { return Graph(order); }

Graph with_edge(Graph g, Edge e) {
  g.add_edge(e);
  return g;
}

Graph without_edge(Graph g, Edge e) {
  g.remove_edge(e);
  return g;
}

VertexRemoval remove_vertex(const Graph& g, VertexId v) {
  if (v < 0 || v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(g.order()));
  }
  VertexRemoval out{Graph(g.order() - 1), std::vector<VertexId>(g.order(), -1)};
  for (VertexId u = 0; u < g.order(); ++u) {
    if (u != v) out.relabel[u] = u < v ? u : u - 1;
  }
  for (Edge e : g.edges()) {
    if (e.u == v || e.v == v) continue;
    out.graph.add_edge(out.relabel[e.u], out.relabel[e.v]);
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (VertexId u : frontier) next |= g.neighbors(u);
    frontier = next - seen;
    seen |= next;
  }
  return seen == g.vertices();
}

}  // namespace domgame
