#include "domgame/families.hpp"

#include <stdexcept>

#include "domgame/solver.hpp"

namespace domgame {

namespace {

void require_k(int k, const char* family) {
  if (k < 0) throw std::invalid_argument(std::string("family ") + family + ": k must be >= 0");
}

// Appends a disjoint copy of `part`; returns the id offset of its vertex 0.
VertexId append(Graph& g, const Graph& part) {
  const VertexId offset = g.order();
  for (VertexId i = 0; i < part.order(); ++i) g.add_vertex();
  for (Edge e : part.edges()) g.add_edge(e.u + offset, e.v + offset);
  return offset;
}

VertexId add_leaf(Graph& g, VertexId at) {
  const VertexId leaf = g.add_vertex();
  g.add_edge(at, leaf);
  return leaf;
}

ClaimedValues claims(int gg, int gg_removed, int ggp, int ggp_removed) {
  return ClaimedValues{gg, gg_removed, ggp, ggp_removed, {}};
}

// Shared shape of U_k and V_k: `core` with designated vertex `anchor`, joined
// to the center x of B = K_{1,4} plus one edge between two leaves.
MarkedGraph core_with_b(const Graph& core, VertexId anchor, int k) {
  MarkedGraph out;
  out.graph = core;
  const VertexId x = out.graph.add_vertex();
  const VertexId a = add_leaf(out.graph, x);
  const VertexId b = add_leaf(out.graph, x);
  add_leaf(out.graph, x);
  add_leaf(out.graph, x);
  out.graph.add_edge(a, b);
  out.graph.add_edge(anchor, x);
  attach_p6_paths(out.graph, x, k);
  out.mark = Edge(x, a);
  out.labels = {{"x", x}};
  return out;
}

// Shared shape of X_k and Q_k: `core` with z and its twin z', joined to a
// K_{1,5} with center x and distinguished leaf x'.
MarkedGraph twin_core_with_star(const Graph& core, VertexId z, int k) {
  MarkedGraph out;
  out.graph = core;
  const VertexId z_twin = add_twin(out.graph, z);
  const VertexId x = out.graph.add_vertex();
  const VertexId x_leaf = add_leaf(out.graph, x);
  for (int i = 0; i < 4; ++i) add_leaf(out.graph, x);
  out.graph.add_edge(z, x);
  out.graph.add_edge(z_twin, x_leaf);
  attach_p6_paths(out.graph, x, k);
  out.mark = Edge(z_twin, x_leaf);
  out.labels = {{"z", z}, {"z'", z_twin}, {"x", x}, {"x'", x_leaf}};
  return out;
}

// Shared shape of Z_k and W_k: `core` joined at z to the center x of a K_{1,3}
// with one edge subdivided; v is the far end of the subdivided edge.
MarkedGraph core_with_spider(const Graph& core, VertexId z, int k) {
  MarkedGraph out;
  out.graph = core;
  const VertexId x = out.graph.add_vertex();
  add_leaf(out.graph, x);
  add_leaf(out.graph, x);
  const VertexId middle = add_leaf(out.graph, x);
  const VertexId v = add_leaf(out.graph, middle);
  out.graph.add_edge(z, x);
  attach_p6_paths(out.graph, x, k);
  out.mark = v;
  out.labels = {{"z", z}, {"x", x}, {"v", v}};
  return out;
}

// True if playing `start` first is optimal for Dominator in Game 1.
bool is_optimal_start(const Graph& g, VertexId start, int* game_value) {
  Solver solver(g);
  const int best = solver.value(VertexSet{}, Player::Dominator);
  if (game_value != nullptr) *game_value = best;
  if (start < 0 || start >= g.order()) return false;
  return 1 + solver.value(g.closed_neighborhood(start), Player::Staller) == best;
}

bool is_tree(const Graph& g) { return g.order() >= 1 && is_connected(g) && g.size() == g.order() - 1; }

}  // namespace

Graph MarkedGraph::removed() const {
  if (const auto* e = std::get_if<Edge>(&mark)) return without_edge(graph, *e);
  if (const auto* v = std::get_if<VertexId>(&mark)) return remove_vertex(graph, *v).graph;
  throw std::logic_error("construction has no mark");
}

std::string MarkedGraph::mark_string() const {
  if (const auto* e = std::get_if<Edge>(&mark)) {
    return std::to_string(e->u) + "-" + std::to_string(e->v);
  }
  if (const auto* v = std::get_if<VertexId>(&mark)) return std::to_string(*v);
  return "";
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path order must be >= 1");
  Graph g(n);
  for (VertexId v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle order must be >= 3");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph star(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star needs a non-negative leaf count");
  Graph g(leaves + 1);
  for (VertexId v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

MarkedGraph graph_Z() {
  // Figure labels v1..v9 map to 0..8.
  static constexpr int kEdges[][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 9}, {9, 8}, {8, 7}, {7, 6},
                                      {6, 1}, {7, 2}, {8, 5}, {5, 4}, {5, 9}, {3, 8}};
  MarkedGraph out;
  out.graph = Graph(9);
  for (const auto& e : kEdges) out.graph.add_edge(e[0] - 1, e[1] - 1);
  out.labels = {{"z", 8}};
  return out;
}

void attach_p6_paths(Graph& g, VertexId hub, int count) {
  for (int i = 0; i < count; ++i) {
    VertexId previous = hub;
    for (int step = 0; step < 5; ++step) previous = add_leaf(g, previous);
  }
}

VertexId add_twin(Graph& g, VertexId u) {
  const VertexSet neighbors = g.neighbors(u);
  const VertexId twin = g.add_vertex();
  g.add_edge(u, twin);
  for (VertexId w : neighbors) g.add_edge(w, twin);
  return twin;
}

FamilyInstance family_U(int k) {
  require_k(k, "U");
  FamilyInstance out{"U", k, 0, core_with_b(cycle(6), 0, k), claims(2 * k + 3, 2 * k + 5, 2 * k + 4, 2 * k + 6)};
  out.marked.labels["u"] = 0;
  return out;
}

FamilyInstance family_V(int k) {
  require_k(k, "V");
  FamilyInstance out{"V", k, 0, core_with_b(graph_Z().graph, 8, k), claims(2 * k + 4, 2 * k + 6, 2 * k + 5, 2 * k + 7)};
  out.marked.labels["z"] = 8;
  return out;
}

FamilyInstance family_Y(int k) {
  require_k(k, "Y");
  MarkedGraph m;
  m.graph = cycle(5);
  const VertexId t = 0;
  const VertexId x = 1;
  const VertexId x_prime = 4;
  const VertexId y = m.graph.add_vertex();
  m.graph.add_edge(y, x);
  m.graph.add_edge(y, x_prime);
  add_leaf(m.graph, x);
  add_leaf(m.graph, x);
  add_leaf(m.graph, t);
  for (int i = 0; i < k; ++i) add_leaf(m.graph, add_leaf(m.graph, x));
  m.mark = Edge(x_prime, y);
  m.labels = {{"t", t}, {"x", x}, {"x'", x_prime}, {"y", y}};
  return FamilyInstance{"Y", k, 0, std::move(m), claims(k + 4, k + 3, k + 5, k + 4)};
}

FamilyInstance family_X(int k) {
  require_k(k, "X");
  return FamilyInstance{"X", k, 0, twin_core_with_star(graph_Z().graph, 8, k),
                        claims(2 * k + 6, 2 * k + 4, 2 * k + 7, 2 * k + 5)};
}

FamilyInstance family_Q(int k) {
  require_k(k, "Q");
  return FamilyInstance{"Q", k, 0, twin_core_with_star(cycle(6), 0, k),
                        claims(2 * k + 5, 2 * k + 3, 2 * k + 6, 2 * k + 4)};
}

FamilyInstance family_Zk(int k) {
  require_k(k, "Zk");
  return FamilyInstance{"Zk", k, 0, core_with_spider(graph_Z().graph, 8, k),
                        claims(2 * k + 6, 2 * k + 4, 2 * k + 7, 2 * k + 5)};
}

FamilyInstance family_W(int k) {
  require_k(k, "W");
  return FamilyInstance{"W", k, 0, core_with_spider(cycle(6), 0, k),
                        claims(2 * k + 5, 2 * k + 3, 2 * k + 6, 2 * k + 4)};
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"U", "V", "Y", "X", "Q", "Zk", "W"};
  return names;
}

bool is_family_name(const std::string& name) {
  for (const auto& n : family_names()) {
    if (n == name) return true;
  }
  return false;
}

FamilyInstance make_family(const std::string& name, int k) {
  if (name == "U") return family_U(k);
  if (name == "V") return family_V(k);
  if (name == "Y") return family_Y(k);
  if (name == "X") return family_X(k);
  if (name == "Q") return family_Q(k);
  if (name == "Zk") return family_Zk(k);
  if (name == "W") return family_W(k);
  throw std::invalid_argument("unknown family '" + name + "'");
}

FamilyInstance tree_leaf_triangle(const Graph& tree, VertexId start, const std::string& name) {
  if (!is_tree(tree)) throw std::invalid_argument(name + ": input is not a tree");
  int value = 0;
  if (!is_optimal_start(tree, start, &value)) {
    throw std::invalid_argument(name + ": vertex " + std::to_string(start) +
                                " is not an optimal first move for Dominator");
  }
  MarkedGraph m;
  m.graph = tree;
  add_leaf(m.graph, start);
  add_leaf(m.graph, start);
  const VertexId y = add_leaf(m.graph, start);
  const VertexId w = add_leaf(m.graph, start);
  m.graph.add_edge(y, w);
  m.mark = Edge(start, y);
  m.labels = {{"v", start}, {"y", y}};
  ClaimedValues c;
  c.gg = value;
  c.gg_removed = value + 1;
  return FamilyInstance{name, -1, 'b', std::move(m), c};
}

FamilyInstance leaf_attachment(const Graph& base, VertexId start, int base_value, const std::string& name) {
  if (!is_optimal_start(base, start, nullptr)) {
    throw std::invalid_argument(name + ": vertex " + std::to_string(start) +
                                " is not an optimal first move for Dominator");
  }
  MarkedGraph m;
  m.graph = base;
  const VertexId v = add_leaf(m.graph, start);
  m.mark = v;
  m.labels = {{"x", start}, {"v", v}};
  ClaimedValues c;
  c.gg = base_value;
  c.gg_removed = base_value;
  return FamilyInstance{name, -1, 'f', std::move(m), c};
}

FamilyInstance clique_with_leaves(int k) {
  if (k < 1) throw std::invalid_argument("clique_with_leaves: k must be >= 1");
  MarkedGraph m;
  m.graph = complete(k);
  for (VertexId v = 0; v < k; ++v) add_leaf(m.graph, v);
  m.mark = Edge(0, 1);
  ClaimedValues c;
  c.ggp = k;
  c.ggp_removed = k;
  return FamilyInstance{"clique-leaves-" + std::to_string(k), k, 'd', std::move(m), c};
}

FamilyInstance clique_partial_leaves(int l) {
  if (l < 1) throw std::invalid_argument("clique_partial_leaves: l must be >= 1");
  MarkedGraph m;
  m.graph = complete(l + 2);
  for (VertexId v = 0; v < l; ++v) add_leaf(m.graph, v);
  m.mark = VertexId{l + 1};
  m.labels = {{"v", l + 1}};
  ClaimedValues c;
  c.ggp = l + 1;
  c.ggp_removed = l + 1;
  return FamilyInstance{"clique-partial-leaves-" + std::to_string(l), l, 'f', std::move(m), c};
}

std::vector<FamilyInstance> exceptional_constructions() {
  std::vector<FamilyInstance> out;

  {  // Two triangles joined by a 2-edge matching.
    MarkedGraph m;
    m.graph = complete(3);
    append(m.graph, complete(3));
    m.graph.add_edge(0, 3);
    m.graph.add_edge(1, 4);
    m.mark = Edge(0, 3);
    ClaimedValues c;
    c.gg = 3;
    c.gg_removed = 2;
    out.push_back({"cliques-matching", -1, 'a', std::move(m), c});
  }

  auto certified_start = [](const Graph& g) {
    return best_move(g, GameState{VertexSet{}, Player::Dominator}).vertex;
  };
  for (auto [name, tree] : {std::pair{"tree-triangle-P4", path(4)}, std::pair{"tree-triangle-P7", path(7)},
                            std::pair{"tree-triangle-star", star(3)}}) {
    out.push_back(tree_leaf_triangle(tree, certified_start(tree), name));
  }

  for (int l = 1; l <= 5; ++l) {
    MarkedGraph m;
    m.graph = cycle(2 * l + 1);
    m.mark = Edge(0, 2 * l);
    ClaimedValues c;
    c.ggp = l;
    c.ggp_removed = l + 1;
    out.push_back({"odd-cycle-" + std::to_string(2 * l + 1), l, 'c', std::move(m), c});
  }

  {
    MarkedGraph m;
    m.graph = cycle(4);
    m.mark = Edge(0, 1);
    ClaimedValues c;
    c.ggp = 2;
    c.ggp_removed = 2;
    out.push_back({"C4", -1, 'd', std::move(m), c});
  }
  {  // P_4 = 0-1-2-3 with inner vertex u = 1 in the triangle 1-4-5.
    MarkedGraph m;
    m.graph = path(4);
    const VertexId p = add_leaf(m.graph, 1);
    const VertexId q = add_leaf(m.graph, 1);
    m.graph.add_edge(p, q);
    m.mark = Edge(p, q);
    m.labels = {{"u", 1}};
    ClaimedValues c;
    c.ggp = 3;
    c.ggp_removed = 3;
    out.push_back({"P4-triangle", -1, 'd', std::move(m), c});
  }
  out.push_back(clique_with_leaves(4));
  out.push_back(clique_with_leaves(5));

  {  // K_{1,4} (center 0, leaves 1..4); triangle 5-6-7; edge 0-5; e = 6-1.
    MarkedGraph m;
    m.graph = star(4);
    const VertexId offset = append(m.graph, complete(3));
    m.graph.add_edge(0, offset);
    m.graph.add_edge(offset + 1, 1);
    m.mark = Edge(offset + 1, 1);
    ClaimedValues c;
    c.ggp = 4;
    c.ggp_removed = 3;
    c.note = "published as gamma_g'(H)=4 and gamma_g'(H)=3; second value read as H-e";
    out.push_back({"star-triangle", -1, 'e', std::move(m), c});
  }

  {
    const Graph c6 = cycle(6);
    out.push_back(leaf_attachment(c6, certified_start(c6), 3, "leaf-attach-C6"));
    const Graph z = graph_Z().graph;
    out.push_back(leaf_attachment(z, certified_start(z), 4, "leaf-attach-Z"));
    const Graph p7 = path(7);
    out.push_back(leaf_attachment(p7, certified_start(p7), 3, "leaf-attach-P7"));
  }
  for (int l = 1; l <= 4; ++l) out.push_back(clique_partial_leaves(l));

  {
    MarkedGraph m;
    m.graph = cycle(6);
    const VertexId v = add_leaf(m.graph, 0);
    m.mark = v;
    m.labels = {{"v", v}};
    ClaimedValues c;
    c.ggp = 4;
    c.ggp_removed = 2;
    out.push_back({"C6-leaf", -1, 'g', std::move(m), c});
  }
  {
    MarkedGraph m = graph_Z();
    const VertexId v = add_leaf(m.graph, 8);
    m.mark = v;
    m.labels["v"] = v;
    ClaimedValues c;
    c.ggp = 5;
    c.ggp_removed = 3;
    out.push_back({"Z-leaf", -1, 'g', std::move(m), c});
  }
  return out;
}

}  // namespace domgame
