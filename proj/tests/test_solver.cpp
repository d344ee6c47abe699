#include <doctest.h>

#include <random>
#include <stdexcept>

#include "domgame/domination.hpp"
#include "domgame/enumerate.hpp"
#include "domgame/errors.hpp"
#include "domgame/families.hpp"
#include "domgame/solver.hpp"
#include "support.hpp"

using namespace domgame;

namespace {

constexpr std::uint64_t kSeed = 20140101;

VertexSet as_set(std::uint64_t bits) { return VertexSet(bits); }

}  // namespace

TEST_CASE("legal moves") {
  CHECK(legal_moves(complete(3), {}) == VertexSet::full(3));
  CHECK(legal_moves(complete(3), VertexSet::full(3)).empty());
  VertexSet s;
  s.insert(0);
  s.insert(1);
  VertexSet expect;
  expect.insert(1);
  expect.insert(2);
  CHECK(legal_moves(path(3), s) == expect);
}

TEST_CASE("apply_move") {
  const GameState next = apply_move(path(3), {}, 0);
  CHECK(next.dominated.size() == 2);
  CHECK(next.to_move == Player::Staller);
  CHECK_THROWS_AS(apply_move(path(3), next, 0), std::invalid_argument);
  CHECK_THROWS(apply_move(path(3), {}, 3));
}

TEST_CASE("named values") {
  CHECK(game_value(path(4), {VertexSet::full(4), Player::Dominator}) == 0);
  CHECK(game_value(path(7), {}) == 3);
  CHECK(game_value(graph_Z().graph, {}) == 4);
  CHECK(gamma_g(cycle(6)) == 3);
  CHECK(gamma_g_prime(cycle(6)) == 2);
  CHECK(gamma_g_prime(path(5)) == 3);
  CHECK(gamma_g(path(2)) == 1);
  CHECK(gamma_g(cycle(7)) == 3);
  CHECK(gamma_g_prime(cycle(10)) == 4);
  for (int n = 1; n <= 8; ++n) CHECK(gamma_g(complete(n)) == 1);
  CHECK(gamma_g(family_U(0).marked.graph) == 3);
  CHECK(gamma_g_prime(family_U(0).marked.graph) == 4);
}

TEST_CASE("pre-dominated starts") {
  const MarkedGraph z = graph_Z();
  const VertexSet zset = VertexSet::single(z.labels.at("z"));
  CHECK(gamma_g_given(z.graph, zset, Player::Dominator) == 4);
  CHECK(gamma_g_given(z.graph, zset, Player::Staller) == 3);
  CHECK(gamma_g_given(cycle(6), VertexSet::single(0), Player::Dominator) == 3);
  CHECK(gamma_g_given(cycle(6), VertexSet::single(0), Player::Staller) == 2);
  CHECK(gamma_g_given(cycle(6), VertexSet::full(6), Player::Staller) == 0);
}

TEST_CASE("paths and cycles match the closed forms") {
  for (int n = 3; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(gamma_g(path(n)) == testsupport::path_gg(n));
    CHECK(gamma_g_prime(path(n)) == testsupport::path_ggp(n));
    CHECK(gamma_g(cycle(n)) == testsupport::cycle_gg(n));
    CHECK(gamma_g_prime(cycle(n)) == testsupport::cycle_ggp(n));
  }
}

TEST_CASE("best_move") {
  const BestMove k3 = best_move(complete(3), {});
  CHECK(k3.vertex == 0);
  CHECK(k3.remaining == 0);
  CHECK(k3.total == 1);
  const BestMove p3 = best_move(path(3), {});
  CHECK(p3.vertex == 1);
  CHECK(p3.total == 1);
  CHECK_THROWS_AS(best_move(path(3), {VertexSet::full(3), Player::Dominator}), std::invalid_argument);
}

TEST_CASE("best_move is consistent with the value") {
  std::mt19937_64 rng(kSeed);
  int checked = 0;
  while (checked < 500) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = testsupport::random_graph(rng, n, 0.3);
    const GameState state{as_set(testsupport::random_subset(rng, n) & rng()),
                          rng() % 2 ? Player::Dominator : Player::Staller};
    if (state.dominated == g.vertices()) continue;
    Solver solver(g);
    const BestMove m = solver.best_move(state);
    REQUIRE(legal_moves(g, state.dominated).contains(m.vertex));
    const GameState next = apply_move(g, state, m.vertex);
    CHECK(solver.value(state) == 1 + solver.value(next));
    CHECK(m.total == solver.value(state));
    CHECK(m.remaining == oracle_game_value(g, next));
    ++checked;
  }
}

TEST_CASE("library oracle agrees with the naive recursion") {
  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : labeled_graphs(n, false)) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        for (bool dom : {true, false}) {
          const GameState state{as_set(s), dom ? Player::Dominator : Player::Staller};
          CHECK(oracle_game_value(g, state) == testsupport::naive_value(g, s, dom));
        }
      }
    }
  }
}

TEST_CASE("solver equals the naive recursion on all graphs of order 5") {
  for (const Graph& g : labeled_graphs(5, false)) {
    Solver solver(g);
    for (bool dom : {true, false}) {
      const Player p = dom ? Player::Dominator : Player::Staller;
      CHECK(solver.value({}, p) == testsupport::naive_value(g, 0, dom));
    }
  }
}

TEST_CASE("pruned and unpruned search agree") {
  std::mt19937_64 rng(kSeed + 1);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = testsupport::random_graph(rng, n, 0.15 + 0.5 * (rng() % 100) / 100.0);
    const GameState state{as_set(testsupport::random_subset(rng, n) & rng() & rng()),
                          rng() % 2 ? Player::Dominator : Player::Staller};
    Solver pruned(g);
    Solver plain(g, SolverOptions{.pruning = false, .move_ordering = false});
    Solver unordered(g, SolverOptions{.pruning = true, .move_ordering = false});
    const int v = pruned.value(state);
    CHECK(v == plain.value(state));
    CHECK(v == unordered.value(state));
  }
}

TEST_CASE("repeated queries on one solver are stable") {
  Solver solver(family_X(0).marked.graph);
  const int first = solver.value({}, Player::Dominator);
  const int second = solver.value({}, Player::Staller);
  CHECK(first == 6);
  CHECK(second == 7);
  CHECK(solver.value({}, Player::Dominator) == first);
  CHECK(solver.table_size() > 0);
  CHECK(solver.stats().nodes > 0);
}

TEST_CASE("game-theoretic properties on random graphs") {
  std::mt19937_64 rng(kSeed + 2);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = testsupport::random_graph(rng, n, 0.3);
    Solver solver(g);
    const int gg = solver.value({}, Player::Dominator);
    const int ggp = solver.value({}, Player::Staller);
    const int gamma = domination_number(g);
    // start-gap and sandwich
    CHECK(std::abs(gg - ggp) <= 1);
    CHECK(gamma <= gg);
    CHECK(gg <= 2 * gamma - 1);
    // a game never lasts longer than the number of vertices
    CHECK(gg <= n);
    CHECK(ggp <= n);

    // continuation: more pre-domination never lengthens the game
    const VertexSet b = as_set(testsupport::random_subset(rng, n) & rng());
    const VertexSet a = b | as_set(testsupport::random_subset(rng, n));
    for (Player p : {Player::Dominator, Player::Staller}) {
      CHECK(solver.value(a, p) <= solver.value(b, p));
    }
  }
}

TEST_CASE("forests: Dominator-start never exceeds Staller-start") {
  std::mt19937_64 rng(kSeed + 3);
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& t : labeled_trees(n)) {
      Solver solver(t);
      const VertexSet s = as_set(testsupport::random_subset(rng, n));
      CHECK(solver.value({}, Player::Dominator) <= solver.value({}, Player::Staller));
      CHECK(solver.value(s, Player::Dominator) <= solver.value(s, Player::Staller));
    }
  }
  CHECK(gamma_g(complete(2)) == 1);
  CHECK(gamma_g_prime(complete(2)) == 1);
  CHECK(gamma_g(star(5)) == 1);
  CHECK(gamma_g_prime(star(5)) == 2);
}

TEST_CASE("oracle order guard") {
  CHECK_THROWS_AS(oracle_game_value(path(kMaxOracleOrder + 1), {}), OrderLimitError);
}

TEST_CASE("domination number") {
  CHECK(domination_number(cycle(6)) == 2);
  CHECK(domination_number(graph_Z().graph) == 3);
  for (int n = 1; n <= 6; ++n) CHECK(domination_number(complete(n)) == 1);
  CHECK(domination_number(new_graph(0)) == 0);
  CHECK(domination_number(new_graph(4)) == 4);

  std::mt19937_64 rng(kSeed + 4);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Graph g = testsupport::random_graph(rng, n, 0.25);
    const VertexSet d = minimum_dominating_set(g);
    VertexSet covered;
    for (VertexId v : d) covered = covered | g.closed_neighborhood(v);
    CHECK(covered == g.vertices());
    CHECK(d.size() == testsupport::naive_domination_number(g));
  }
  CHECK_THROWS_AS(domination_number(new_graph(kMaxDominationOrder + 1)), OrderLimitError);
}
