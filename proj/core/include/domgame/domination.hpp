#pragma once

#include "domgame/graph.hpp"

namespace domgame {

inline constexpr int kMaxDominationOrder = 30;

/// A minimum dominating set, found by branch and bound: branch on the closed
/// neighborhood of the lowest undominated vertex, prune with the
/// ceil(undominated / max coverage) bound. Throws OrderLimitError above 30.
VertexSet minimum_dominating_set(const Graph& g);

/// gamma(G), the size of a minimum dominating set.
int domination_number(const Graph& g);

}  // namespace domgame
