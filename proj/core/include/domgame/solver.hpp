#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

/// Dominator minimizes the number of moves, Staller maximizes it.
enum class Player : std::uint8_t { Dominator = 0, Staller = 1 };

constexpr Player other(Player p) {
  return p == Player::Dominator ? Player::Staller : Player::Dominator;
}

std::string_view to_string(Player p);

/// Complete minimax state: which vertices are dominated and who moves next.
/// Game value depends only on this pair, not on the move history.
struct GameState {
  VertexSet dominated;
  Player to_move = Player::Dominator;

  friend bool operator==(const GameState&, const GameState&) = default;
};

/// Vertices whose closed neighborhood contains an undominated vertex.
VertexSet legal_moves(const Graph& g, VertexSet dominated);

/// State reached by playing `v`.
GameState apply_move(const Graph& g, const GameState& state, VertexId v);

/// Memo of per-state bounds for one graph. Entries hold a [lower, upper]
/// interval per player; lower == upper marks an exact value.
class TranspositionTable {
 public:
  struct Bounds {
    int lower;
    int upper;
  };

  explicit TranspositionTable(int initial_capacity_log2 = 12);

  /// Bounds for the state, or the trivial [0, kUnknown] when absent.
  Bounds lookup(VertexSet dominated, Player to_move) const;
  /// Intersects the stored interval with [lower, upper].
  void store(VertexSet dominated, Player to_move, int lower, int upper);

  std::size_t size() const { return used_; }
  void clear();

  static constexpr int kUnknown = 127;

 private:
  struct Slot {
    std::uint64_t key;
    std::int8_t lower[2];
    std::int8_t upper[2];
  };
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  std::size_t probe(std::uint64_t key) const;
  void grow();

  std::vector<Slot> slots_;
  std::size_t used_ = 0;
};

struct SolverOptions {
  /// Alpha-beta windows with bound entries in the table. When false the
  /// solver is a plain memoized minimax storing exact values only.
  bool pruning = true;
  /// Descending newly-dominated count, ascending vertex id.
  bool move_ordering = true;
};

struct SolverStats {
  std::uint64_t nodes = 0;
  std::uint64_t table_hits = 0;
  std::uint64_t cutoffs = 0;
};

struct BestMove {
  VertexId vertex = -1;
  /// Optimal number of moves left after `vertex` is played.
  int remaining = 0;
  /// remaining + 1: the value of the state the move was chosen from.
  int total = 0;
};

/// Exact domination game evaluator bound to one graph. Keeps its
/// transposition table across queries, so repeated queries on the same graph
/// (different pre-dominated sets, both starters) share work. Not thread-safe;
/// use one Solver per thread.
class Solver {
 public:
  explicit Solver(const Graph& g, SolverOptions options = {});

  const Graph& graph() const { return graph_; }

  /// Optimal number of moves remaining from `state`.
  int value(const GameState& state);
  int value(VertexSet dominated, Player to_move) { return value(GameState{dominated, to_move}); }

  /// Optimal move with smallest vertex id among ties.
  /// Throws std::invalid_argument on a terminal state.
  BestMove best_move(const GameState& state);

  const SolverStats& stats() const { return stats_; }
  std::size_t table_size() const { return table_.size(); }

 private:
  int search(VertexSet dominated, Player to_move, int alpha, int beta);
  int search_exact(VertexSet dominated, Player to_move);
  int collect_moves(VertexSet undominated, VertexSet* moves) const;
  void check_state(const GameState& state) const;

  Graph graph_;
  SolverOptions options_;
  VertexSet full_;
  std::vector<VertexSet> closed_;
  TranspositionTable table_;
  SolverStats stats_;
};

/// Free-function forms; each builds a fresh Solver.
int game_value(const Graph& g, const GameState& state);
/// Game 1 value: Dominator starts with nothing dominated.
int gamma_g(const Graph& g);
/// Game 2 value: Staller starts.
int gamma_g_prime(const Graph& g);
/// Value of the game on g with `pre` already dominated.
int gamma_g_given(const Graph& g, VertexSet pre, Player starter);
BestMove best_move(const Graph& g, const GameState& state);

inline constexpr int kMaxOracleOrder = 12;

/// Unmemoized, unpruned depth-first minimax over every legal vertex. Serves as
/// the independent reference for Solver. Throws OrderLimitError above order 12.
int oracle_game_value(const Graph& g, const GameState& state);

}  // namespace domgame
