#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "domgame/families.hpp"
#include "domgame/graph_io.hpp"
#include "domgame/report.hpp"
#include "domgame/solver.hpp"

using namespace domgame;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("domgame_test_" + name);
}

// Extracts the "move N: Player plays v" entries from a play transcript.
std::vector<VertexId> played_moves(const std::string& transcript) {
  static const std::regex entry(R"(move \d+: \w+ plays (\d+))");
  std::vector<VertexId> moves;
  for (std::sregex_iterator it(transcript.begin(), transcript.end(), entry), end; it != end; ++it) {
    moves.push_back(std::stoi((*it)[1]));
  }
  return moves;
}

}  // namespace

TEST_CASE("solve") {
  CHECK(run({"solve", "--family", "Z"}).out == "gamma_g=4 gamma_g_prime=3\n");
  CHECK(run({"solve", "--cycle", "6", "--pre", "z"}).out == "gamma_g=3 gamma_g_prime=2\n");
  CHECK(run({"solve", "--graph6", "@"}).out == "gamma_g=1 gamma_g_prime=1\n");
  CHECK(run({"solve", "--family", "Z", "--pre", "z", "--gamma"}).out == "gamma_g=4 gamma_g_prime=3 gamma=3\n");
  CHECK(run({"solve", "--path", "5", "--variant", "staller"}).out == "gamma_g_prime=3\n");
  CHECK(run({"solve", "--family", "U", "--k", "1", "--csv"}).out == "gamma_g,gamma_g_prime\n5,6\n");
  CHECK(run({"solve", "--edges", "-"}, "3 2\n0 1\n1 2\n").out == "gamma_g=1 gamma_g_prime=2\n");
  CHECK(run({"solve", "--family", "tree-triangle-P7"}).code == cli::kSuccess);
}

TEST_CASE("solve usage errors") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"solve"}).code == cli::kUsageError);
  CHECK(run({"solve", "--cycle", "5", "--path", "4"}).code == cli::kUsageError);
  CHECK(run({"solve", "--graph6", "A!"}).code == cli::kUsageError);
  CHECK(run({"solve", "--family", "nope"}).code == cli::kUsageError);
  CHECK(run({"solve", "--family", "Z", "--k", "1"}).code == cli::kUsageError);
  CHECK(run({"solve", "--cycle", "5", "--k", "1"}).code == cli::kUsageError);
  CHECK(run({"solve", "--cycle", "5", "--pre", "9"}).code == cli::kUsageError);
  CHECK(run({"solve", "--cycle", "5", "--pre", "q"}).code == cli::kUsageError);
  CHECK(run({"solve", "--edges", "/nonexistent/graph.txt"}).code == cli::kUsageError);
  CHECK(run({"solve", "--edges", "-"}, "3 5\n0 1\n").code == cli::kUsageError);
  CHECK(run({"bogus"}).code == cli::kUsageError);
  const Result r = run({"solve", "--cycle", "5", "--path", "4"});
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("help exits cleanly") {
  const Result r = run({"--help"});
  CHECK(r.code == cli::kSuccess);
  CHECK(contains(r.out, "solve"));
  CHECK(run({"verify", "--help"}).code == cli::kSuccess);
}

TEST_CASE("delta") {
  const Result y = run({"delta", "--family", "Y", "--k", "0", "--edge"});
  CHECK(y.code == cli::kSuccess);
  CHECK(contains(y.out, "4-5*      3        +1"));

  const Result c8 = run({"delta", "--cycle", "8", "--edge", "--csv"});
  std::istringstream lines(c8.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "mark,removed,delta,marked");
  int rows = 0;
  while (std::getline(lines, line) && line[0] != '#') {
    CHECK(split_csv_line(line)[2] == "0");
    ++rows;
  }
  CHECK(rows == 8);
  CHECK(contains(c8.out, "min=0 max=0"));

  const FamilyInstance z0 = family_Zk(0);
  const Result zk = run({"delta", "--family", "Zk", "--k", "0", "--vertex", "--csv"});
  const std::string marked = std::to_string(std::get<VertexId>(z0.marked.mark)) + ",4,2,yes";
  CHECK(contains(zk.out, marked));

  CHECK(run({"delta", "--cycle", "5", "--edge", "--vertex"}).code == cli::kUsageError);
  CHECK(contains(run({"delta", "--cycle", "5", "--variant", "staller"}).out, "min=-1 max=-1"));
}

TEST_CASE("verify") {
  const Result fam = run({"verify", "--families", "Y,U", "--k-max", "0"});
  CHECK(fam.code == cli::kSuccess);
  CHECK(contains(fam.out, "# claims: 8 checked, 0 mismatched"));

  const Result scan = run({"verify", "--scan", "4"});
  CHECK(scan.code == cli::kSuccess);
  CHECK(contains(scan.out, "# histogram edge-gg"));
  CHECK(contains(scan.out, "# result: PASS"));

  CHECK(run({"verify", "--trees", "5"}).code == cli::kSuccess);
  CHECK(run({"verify"}).code == cli::kUsageError);
  CHECK(run({"verify", "--families", "nope"}).code == cli::kUsageError);
  CHECK(run({"verify", "--scan", "9"}).code == cli::kUsageError);
}

TEST_CASE("verify corpus from stdin and report file") {
  CHECK(run({"verify", "--corpus", "-"}, "").code == cli::kSuccess);
  const Result bad = run({"verify", "--corpus", "-"}, "A_\nbad!\nBw\n");
  CHECK(bad.code == cli::kVerificationFailed);
  CHECK(contains(bad.out, "# parse-error line 2"));
  CHECK(contains(bad.out, "# graphs: 2"));

  const auto report = temp_path("report.csv");
  const Result ok = run({"verify", "--corpus", "-", "--report", report.string(), "--all-rows"}, "C~\nCF\n");
  CHECK(ok.code == cli::kSuccess);
  std::ifstream file(report);
  const auto rows = parse_report_rows(file);
  CHECK(rows.size() == 2 * bound_check_names().size());
  // Values in the machine-readable report agree with a fresh solve.
  for (const auto& r : rows) {
    const Graph g = parse_graph6(r.graph6);
    CHECK(r.gg == gamma_g(g));
    CHECK(r.ggp == gamma_g_prime(g));
  }
  std::filesystem::remove(report);
}

TEST_CASE("convert") {
  const Result u = run({"convert", "--family", "U", "--k", "0", "--to", "edge-list"});
  const Graph u0 = family_U(0).marked.graph;
  CHECK(u.out.rfind(std::to_string(u0.order()) + " " + std::to_string(u0.size()) + "\n", 0) == 0);
  CHECK(u0.order() == 11);
  CHECK(parse_edge_list(u.out) == u0);

  CHECK(run({"convert", "--graph6", "?", "--to", "edge-list"}).out == "0 0\n");
  CHECK(run({"convert", "--graph6", "D?{"}).out == "D?{\n");

  const std::string list = "5 4\n0 4\n1 4\n2 4\n3 4\n";
  const Result g6 = run({"convert", "--edges", "-", "--to", "graph6"}, list);
  CHECK(g6.out == "D?{\n");
  const Result back = run({"convert", "--graph6", "D?{", "--to", "edge-list"});
  CHECK(parse_edge_list(back.out) == parse_edge_list(list));

  const auto out_file = temp_path("convert.txt");
  CHECK(run({"convert", "--cycle", "4", "-o", out_file.string()}).code == cli::kSuccess);
  std::ifstream file(out_file);
  std::string line;
  std::getline(file, line);
  CHECK(parse_graph6(line) == cycle(4));
  std::filesystem::remove(out_file);

  CHECK(run({"convert", "--cycle", "4", "--to", "dot"}).code == cli::kUsageError);
}

TEST_CASE("play on K3 as Staller") {
  const Result r = run({"play", "--graph6", "Bw", "--as", "staller"}, "1\n");
  CHECK(r.code == cli::kSuccess);
  CHECK(contains(r.out, "Staller plays 1"));
  CHECK(contains(r.out, "game over: total=1 gamma_g_prime=1"));
}

TEST_CASE("play on C6 as Staller with optimal moves") {
  // Staller opens; after 0 the solver answers and one more move finishes.
  std::string input;
  for (int v = 0; v < 6; ++v) input += std::to_string(v) + "\n";
  const Result r = run({"play", "--cycle", "6", "--as", "staller"}, input);
  CHECK(r.code == cli::kSuccess);
  CHECK(contains(r.out, "gamma_g_prime=2"));
  const auto moves = played_moves(r.out);
  CHECK(moves.size() >= 2);
}

TEST_CASE("play on C6 as Dominator") {
  // A perfect human reaches exactly 3 against the optimal Staller.
  Graph c6 = cycle(6);
  Solver solver(c6);
  GameState state;
  std::string input;
  std::vector<VertexId> expected;
  while (state.dominated != c6.vertices()) {
    const VertexId v = solver.best_move(state).vertex;
    if (state.to_move == Player::Dominator) input += std::to_string(v) + "\n";
    expected.push_back(v);
    state = apply_move(c6, state, v);
  }
  const Result r = run({"play", "--cycle", "6", "--as", "dominator", "--show-eval"}, input);
  CHECK(contains(r.out, "game over: total=3 gamma_g=3"));
  CHECK(played_moves(r.out) == expected);
  CHECK(contains(r.out, "eval: 2 more moves"));

  // Careless human play can only lengthen the game; Staller never lets it drop below 3.
  const Result weak = run({"play", "--cycle", "6", "--as", "dominator"}, "0\n1\n2\n3\n4\n5\n");
  const auto moves = played_moves(weak.out);
  CHECK(moves.size() >= 3);
}

TEST_CASE("play rejects illegal moves and replays consistently") {
  const Result r = run({"play", "--path", "4", "--as", "dominator"}, "7\nx\n0\n0\n3\n2\n");
  CHECK(r.code == cli::kSuccess);
  CHECK(contains(r.out, "illegal move '7'"));
  CHECK(contains(r.out, "illegal move 'x'"));
  CHECK(contains(r.out, "illegal move '0'"));
  // Every recorded move was legal when played; replay the transcript.
  const Graph p4 = path(4);
  GameState state;
  for (VertexId v : played_moves(r.out)) {
    REQUIRE(legal_moves(p4, state.dominated).contains(v));
    state = apply_move(p4, state, v);
  }
  CHECK(state.dominated == p4.vertices());
}

TEST_CASE("play aborts cleanly at end of input") {
  const Result r = run({"play", "--cycle", "6"}, "");
  CHECK(r.code == cli::kSuccess);
  CHECK(contains(r.out, "aborted after 0 moves"));
  CHECK(run({"play", "--cycle", "6", "--pre", "0,1,2,3,4,5"}).code == cli::kUsageError);
  const Result solver_first = run({"play", "--cycle", "6", "--solver-first"}, "");
  CHECK(contains(solver_first.out, "move 1: Staller plays"));
}
