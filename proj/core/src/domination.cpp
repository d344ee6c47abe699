#include "domgame/domination.hpp"

#include <algorithm>
#include <vector>

#include "domgame/errors.hpp"

namespace domgame {

namespace {

class DominatingSetSearch {
 public:
  explicit DominatingSetSearch(const Graph& g) : full_(g.vertices()) {
    for (VertexId v = 0; v < g.order(); ++v) closed_.push_back(g.closed_neighborhood(v));
    // Every vertex on its own is an upper bound.
    best_ = full_;
  }

  VertexSet run() {
    branch(VertexSet{}, VertexSet{});
    return best_;
  }

 private:
  void branch(VertexSet chosen, VertexSet dominated) {
    const VertexSet undominated = full_ - dominated;
    if (undominated.empty()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    int max_gain = 0;
    for (VertexSet closed : closed_) max_gain = std::max(max_gain, (closed & undominated).size());
    const int needed = (undominated.size() + max_gain - 1) / max_gain;
    if (chosen.size() + needed >= best_.size()) return;

    // Some vertex of N[target] must be chosen to dominate target.
    const VertexId target = undominated.min();
    for (VertexId v : closed_[target]) {
      VertexSet next = chosen;
      next.insert(v);
      branch(next, dominated | closed_[v]);
    }
  }

  VertexSet full_;
  std::vector<VertexSet> closed_;
  VertexSet best_;
};

}  // namespace

VertexSet minimum_dominating_set(const Graph& g) {
  if (g.order() > kMaxDominationOrder) {
    throw OrderLimitError("domination_number", g.order(), kMaxDominationOrder);
  }
  return DominatingSetSearch(g).run();
}

int domination_number(const Graph& g) { return minimum_dominating_set(g).size(); }

}  // namespace domgame
