#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

/// What a construction designates for removal.
using Mark = std::variant<std::monostate, Edge, VertexId>;

struct MarkedGraph {
  Graph graph;
  Mark mark;
  /// Construction-designated vertices (x, x', y, z, z', t, u, v).
  std::map<std::string, VertexId> labels;

  bool has_edge_mark() const { return std::holds_alternative<Edge>(mark); }
  bool has_vertex_mark() const { return std::holds_alternative<VertexId>(mark); }
  /// Graph with the marked edge or vertex removed. Throws std::logic_error
  /// when there is no mark.
  Graph removed() const;
  std::string mark_string() const;
};

/// Published values for a construction. "removed" means after deleting the mark.
struct ClaimedValues {
  std::optional<int> gg;
  std::optional<int> gg_removed;
  std::optional<int> ggp;
  std::optional<int> ggp_removed;
  /// Free-form caveat attached to the claim (e.g. an ambiguous statement).
  std::string note;
};

struct FamilyInstance {
  std::string name;
  /// Family parameter; -1 for constructions without one.
  int k = -1;
  /// Exceptional-catalog group letter ('a'..'g'); 0 for parametric families.
  char group = 0;
  MarkedGraph marked;
  ClaimedValues claims;
};

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{1,leaves} with center 0.
Graph star(int leaves);

/// The 9-vertex graph Z. Vertices 0..8 follow the figure labels v1..v9;
/// z = 8. Edges: v1v2 v2v3 v3v4 v4v9 v9v8 v8v7 v7v6 v6v1 v7v2 v8v5 v5v4 v5v9 v3v8.
MarkedGraph graph_Z();

/// Appends `count` paths P_6 with one end identified with `hub` (5 new vertices each).
void attach_p6_paths(Graph& g, VertexId hub, int count);
/// Appends a new vertex adjacent to `u` and every neighbor of `u`, so both
/// share the same closed neighborhood. Returns the new vertex.
VertexId add_twin(Graph& g, VertexId u);

// Parametric families. All throw std::invalid_argument for k < 0.
//
// U_k: C_6 on 0..5 (u = 0), x = 6, B leaves 7..10 with triangle edge 7-8,
//      edge u-x, mark x-7, P_6 paths from 11. Order 11 + 5k.
// V_k: Z on 0..8 (z = 8), x = 9, B leaves 10..13 with triangle edge 10-11,
//      edge z-x, mark x-10, paths from 14. Order 14 + 5k.
// Y_k: C_5 0-1-2-3-4 with t = 0, x = 1, x' = 4; y = 5 adjacent to x, x';
//      leaves 6, 7 on x and 8 on t; mark x'-y; P_3 paths from 9. Order 9 + 2k.
// X_k: Z (z = 8) plus twin z' = 9; star center x = 10 with leaves 11..15,
//      x' = 11; edges z-x, z'-x'; mark z'-x'; paths from 16. Order 16 + 5k.
// Q_k: C_6 (z = 0) plus twin z' = 6; x = 7 with leaves 8..12, x' = 8;
//      edges z-x, z'-x'; mark z'-x'; paths from 13. Order 13 + 5k.
// Zk:  Z (z = 8); S = K_{1,3} with center x = 9, leaves 10, 11 and the
//      subdivided edge x-12-13, v = 13; edge z-x; mark vertex v; paths from 14.
//      Order 14 + 5k.
// W_k: as Zk with C_6 (z = 0) in place of Z: x = 6, leaves 7, 8, x-9-10,
//      v = 10. Order 11 + 5k.
FamilyInstance family_U(int k);
FamilyInstance family_V(int k);
FamilyInstance family_Y(int k);
FamilyInstance family_X(int k);
FamilyInstance family_Q(int k);
FamilyInstance family_Zk(int k);
FamilyInstance family_W(int k);

/// Parametric family names in catalog order: U V Y X Q Zk W.
const std::vector<std::string>& family_names();
bool is_family_name(const std::string& name);
/// Throws std::invalid_argument for unknown names.
FamilyInstance make_family(const std::string& name, int k);

/// Tree T plus two leaves on `start` and a triangle through `start`
/// (vertices n, n+1 leaves; n+2, n+3 triangle). Mark is the triangle edge
/// start-(n+2). Claims gamma_g = l and l + 1 after removal, l = gamma_g(T).
/// Throws std::invalid_argument if `tree` is not a tree or if the solver
/// shows `start` is not an optimal first move for Dominator.
FamilyInstance tree_leaf_triangle(const Graph& tree, VertexId start, const std::string& name);

/// `base` plus a leaf v on `start`, where `start` must be an optimal first
/// Dominator move. Mark is v. Claims gamma_g(G) = gamma_g(G - v) = `base_value`.
FamilyInstance leaf_attachment(const Graph& base, VertexId start, int base_value,
                               const std::string& name);

/// K_k with one pendant leaf on every clique vertex; mark is clique edge 0-1.
FamilyInstance clique_with_leaves(int k);

/// K_{l+2} with leaves on clique vertices 0..l-1; mark is vertex l+1.
FamilyInstance clique_partial_leaves(int l);

/// The full catalog of small exceptional constructions.
std::vector<FamilyInstance> exceptional_constructions();

}  // namespace domgame
