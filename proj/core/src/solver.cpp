#include "domgame/solver.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "domgame/errors.hpp"

namespace domgame {

std::string_view to_string(Player p) {
  return p == Player::Dominator ? "Dominator" : "Staller";
}

VertexSet legal_moves(const Graph& g, VertexSet dominated) {
  const VertexSet undominated = g.vertices() - dominated;
  VertexSet moves;
  if (undominated.empty()) return moves;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.closed_neighborhood(v).intersects(undominated)) moves.insert(v);
  }
  return moves;
}

GameState apply_move(const Graph& g, const GameState& state, VertexId v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("move outside vertex range");
  const VertexSet closed = g.closed_neighborhood(v);
  if (closed.subset_of(state.dominated)) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " dominates nothing new");
  }
  return GameState{state.dominated | closed, other(state.to_move)};
}

// ---------------------------------------------------------------------------
// TranspositionTable

namespace {

constexpr std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

TranspositionTable::TranspositionTable(int initial_capacity_log2) {
  slots_.resize(std::size_t{1} << initial_capacity_log2,
                Slot{kEmpty, {0, 0}, {kUnknown, kUnknown}});
}

void TranspositionTable::clear() {
  std::fill(slots_.begin(), slots_.end(), Slot{kEmpty, {0, 0}, {kUnknown, kUnknown}});
  used_ = 0;
}

std::size_t TranspositionTable::probe(std::uint64_t key) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = mix(key) & mask;
  while (slots_[i].key != kEmpty && slots_[i].key != key) i = (i + 1) & mask;
  return i;
}

TranspositionTable::Bounds TranspositionTable::lookup(VertexSet dominated, Player to_move) const {
  const Slot& slot = slots_[probe(dominated.bits())];
  const auto p = static_cast<std::size_t>(to_move);
  if (slot.key == kEmpty) return {0, kUnknown};
  return {slot.lower[p], slot.upper[p]};
}

void TranspositionTable::store(VertexSet dominated, Player to_move, int lower, int upper) {
  if (2 * (used_ + 1) > slots_.size()) grow();
  const std::uint64_t key = dominated.bits();
  Slot& slot = slots_[probe(key)];
  if (slot.key == kEmpty) {
    slot.key = key;
    ++used_;
  }
  const auto p = static_cast<std::size_t>(to_move);
  slot.lower[p] = static_cast<std::int8_t>(std::max<int>(slot.lower[p], lower));
  slot.upper[p] = static_cast<std::int8_t>(std::min<int>(slot.upper[p], upper));
}

void TranspositionTable::grow() {
  std::vector<Slot> old = std::move(slots_);
  slots_.assign(old.size() * 2, Slot{kEmpty, {0, 0}, {kUnknown, kUnknown}});
  for (const Slot& s : old) {
    if (s.key != kEmpty) slots_[probe(s.key)] = s;
  }
}

// ---------------------------------------------------------------------------
// Solver

namespace {

constexpr int kInfinity = 1 << 20;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

Solver::Solver(const Graph& g, SolverOptions options)
    : graph_(g), options_(options), full_(g.vertices()) {
  closed_.reserve(static_cast<std::size_t>(g.order()));
  for (VertexId v = 0; v < g.order(); ++v) closed_.push_back(g.closed_neighborhood(v));
}

void Solver::check_state(const GameState& state) const {
  if (!state.dominated.subset_of(full_)) {
    throw std::invalid_argument("dominated set " + state.dominated.to_string() +
                                " is not a subset of the vertex set");
  }
}

int Solver::value(const GameState& state) {
  check_state(state);
  if (options_.pruning) return search(state.dominated, state.to_move, -1, kInfinity);
  return search_exact(state.dominated, state.to_move);
}

BestMove Solver::best_move(const GameState& state) {
  check_state(state);
  const VertexSet moves = legal_moves(graph_, state.dominated);
  if (moves.empty()) throw std::invalid_argument("best_move: state is terminal");
  BestMove best;
  for (VertexId v : moves) {
    const int after = value(state.dominated | closed_[v], other(state.to_move));
    const bool better = best.vertex < 0 ||
                        (state.to_move == Player::Dominator ? after < best.remaining
                                                            : after > best.remaining);
    if (better) best = BestMove{v, after, after + 1};
  }
  return best;
}

// Fills `moves` with the distinct non-empty sets N[v] & undominated, ordered by
// descending size then ascending smallest producing vertex. Returns the count.
int Solver::collect_moves(VertexSet undominated, VertexSet* moves) const {
  int count = 0;
  for (VertexSet closed : closed_) {
    const VertexSet gain = closed & undominated;
    if (gain.empty()) continue;
    bool seen = false;
    for (int i = 0; i < count && !seen; ++i) seen = moves[i] == gain;
    if (!seen) moves[count++] = gain;
  }
  if (options_.move_ordering) {
    // Stable on the vertex order established above.
    std::stable_sort(moves, moves + count,
                     [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  }
  return count;
}

int Solver::search(VertexSet dominated, Player to_move, int alpha, int beta) {
  ++stats_.nodes;
  const VertexSet undominated = full_ - dominated;
  if (undominated.empty()) return 0;

  const auto cached = table_.lookup(dominated, to_move);
  if (cached.lower == cached.upper) {
    ++stats_.table_hits;
    return cached.lower;
  }

  std::array<VertexSet, kMaxVertices> moves;
  const int count = collect_moves(undominated, moves.data());
  int max_gain = 0;
  for (int i = 0; i < count; ++i) max_gain = std::max(max_gain, moves[i].size());

  // Every move dominates at least one and at most max_gain new vertices.
  int lower = std::max({cached.lower, 1, ceil_div(undominated.size(), max_gain)});
  int upper = std::min(cached.upper, undominated.size());
  if (to_move == Player::Dominator && max_gain == undominated.size()) upper = 1;
  if (lower >= upper) {
    table_.store(dominated, to_move, upper, upper);
    return upper;
  }
  if (lower >= beta) {
    ++stats_.table_hits;
    return lower;
  }
  if (upper <= alpha) {
    ++stats_.table_hits;
    return upper;
  }

  const int a = std::max(alpha, lower);
  const int b = std::min(beta, upper);
  const Player next = other(to_move);
  int best;
  if (to_move == Player::Dominator) {
    best = kInfinity;
    for (int i = 0; i < count; ++i) {
      const int v = 1 + search(dominated | moves[i], next, a - 1, std::min(b, best) - 1);
      best = std::min(best, v);
      if (best <= a) {
        ++stats_.cutoffs;
        break;
      }
    }
  } else {
    best = -kInfinity;
    for (int i = 0; i < count; ++i) {
      const int v = 1 + search(dominated | moves[i], next, std::max(a, best) - 1, b - 1);
      best = std::max(best, v);
      if (best >= b) {
        ++stats_.cutoffs;
        break;
      }
    }
  }

  if (best <= a) {
    table_.store(dominated, to_move, lower, best);
  } else if (best >= b) {
    table_.store(dominated, to_move, best, upper);
  } else {
    table_.store(dominated, to_move, best, best);
  }
  return best;
}

int Solver::search_exact(VertexSet dominated, Player to_move) {
  ++stats_.nodes;
  const VertexSet undominated = full_ - dominated;
  if (undominated.empty()) return 0;
  const auto cached = table_.lookup(dominated, to_move);
  if (cached.lower == cached.upper) {
    ++stats_.table_hits;
    return cached.lower;
  }
  const Player next = other(to_move);
  int best = to_move == Player::Dominator ? kInfinity : -kInfinity;
  for (VertexId v = 0; v < graph_.order(); ++v) {
    if (!closed_[v].intersects(undominated)) continue;
    const int value = 1 + search_exact(dominated | closed_[v], next);
    best = to_move == Player::Dominator ? std::min(best, value) : std::max(best, value);
  }
  table_.store(dominated, to_move, best, best);
  return best;
}

// ---------------------------------------------------------------------------
// Free functions

int game_value(const Graph& g, const GameState& state) { return Solver(g).value(state); }

int gamma_g(const Graph& g) { return game_value(g, GameState{VertexSet{}, Player::Dominator}); }

int gamma_g_prime(const Graph& g) { return game_value(g, GameState{VertexSet{}, Player::Staller}); }

int gamma_g_given(const Graph& g, VertexSet pre, Player starter) {
  return game_value(g, GameState{pre, starter});
}

BestMove best_move(const Graph& g, const GameState& state) { return Solver(g).best_move(state); }

namespace {

int oracle_recurse(const Graph& g, VertexSet dominated, Player to_move) {
  const VertexSet undominated = g.vertices() - dominated;
  if (undominated.empty()) return 0;
  int best = to_move == Player::Dominator ? kInfinity : -kInfinity;
  for (VertexId v = 0; v < g.order(); ++v) {
    const VertexSet closed = g.closed_neighborhood(v);
    if (!closed.intersects(undominated)) continue;
    const int value = 1 + oracle_recurse(g, dominated | closed, other(to_move));
    best = to_move == Player::Dominator ? std::min(best, value) : std::max(best, value);
  }
  return best;
}

}  // namespace

int oracle_game_value(const Graph& g, const GameState& state) {
  if (g.order() > kMaxOracleOrder) throw OrderLimitError("oracle_game_value", g.order(), kMaxOracleOrder);
  if (!state.dominated.subset_of(g.vertices())) {
    throw std::invalid_argument("dominated set is not a subset of the vertex set");
  }
  return oracle_recurse(g, state.dominated, state.to_move);
}

}  // namespace domgame
