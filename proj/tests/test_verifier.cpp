#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "domgame/enumerate.hpp"
#include "domgame/errors.hpp"
#include "domgame/families.hpp"
#include "domgame/graph_io.hpp"
#include "domgame/report.hpp"
#include "domgame/solver.hpp"
#include "domgame/verifier.hpp"
#include "support.hpp"

using namespace domgame;

namespace {

bool all_pass(const std::vector<CheckResult>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const CheckResult& r) { return r.pass; });
}

// Smallest graph6 string over all relabelings; used to reduce the labeled
// connected 4-vertex graphs to isomorphism classes.
std::string canonical_graph6(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    Graph h(g.order());
    for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
    const std::string s = write_graph6(h);
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("bound checks on theorem instances") {
  const auto rows = check_graph(cycle(6));
  CHECK(rows.size() == bound_check_names().size());
  CHECK(all_pass(rows));
  CHECK(all_pass(check_graph(family_X(0).marked.graph)));
  CHECK(all_pass(check_graph(new_graph(0))));
  CHECK(all_pass(check_graph(new_graph(1))));
}

TEST_CASE("bound and impossibility checks on random 8-vertex graphs") {
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 40; ++i) {
    const Graph g = testsupport::random_graph(rng, 8, 0.35);
    const GraphProfile p = profile_graph(g);
    CHECK(p.edges.size() == static_cast<std::size_t>(g.size()));
    CHECK(p.vertices.size() == 8);
    CHECK(all_pass(check_profile(p)));
    CHECK(all_pass(check_impossibility(p)));
  }
}

TEST_CASE("checks flag a doctored profile") {
  GraphProfile p = profile_graph(cycle(6));
  p.ggp = p.gg + 2;
  const auto rows = check_profile(p);
  const auto gap = std::find_if(rows.begin(), rows.end(), [](const CheckResult& r) { return r.check == "start-gap"; });
  REQUIRE(gap != rows.end());
  CHECK_FALSE(gap->pass);
  CHECK_FALSE(gap->detail.empty());
}

TEST_CASE("edge delta spectra") {
  const auto c8 = edge_delta_spectrum(cycle(8), Player::Dominator);
  CHECK(c8.entries.size() == 8);
  CHECK(c8.min_delta() == 0);
  CHECK(c8.max_delta() == 0);

  const auto c5 = edge_delta_spectrum(cycle(5), Player::Staller);
  CHECK(c5.min_delta() == -1);
  CHECK(c5.max_delta() == -1);

  // P4 minus an edge is 2K2 or K1+P3; both take 2 moves, like P4 itself.
  const auto p4 = edge_delta_spectrum(path(4), Player::Dominator);
  for (const auto& e : p4.entries) {
    const Graph removed = without_edge(path(4), std::get<Edge>(e.mark));
    CHECK(e.removed == testsupport::naive_value(removed, 0, true));
    CHECK(e.delta == 0);
  }

  const FamilyInstance x0 = family_X(0);
  const auto xs = edge_delta_spectrum(x0.marked.graph, Player::Dominator);
  CHECK(xs.delta_at(x0.marked.mark) == 2);
  CHECK_THROWS_AS(xs.delta_at(Mark{Edge(0, 20)}), std::out_of_range);
}

TEST_CASE("vertex delta spectra") {
  const FamilyInstance z0 = family_Zk(0);
  const auto zs = vertex_delta_spectrum(z0.marked.graph, Player::Dominator);
  CHECK(zs.delta_at(z0.marked.mark) == 2);
  CHECK(zs.entries.size() == static_cast<std::size_t>(z0.marked.graph.order()));

  const auto s = vertex_delta_spectrum(star(4), Player::Dominator);
  CHECK(s.delta_at(Mark{VertexId{0}}) == 1 - 4);

  for (int n = 4; n <= 12; ++n) {
    CAPTURE(n);
    const auto p = vertex_delta_spectrum(path(n), Player::Dominator);
    const int step = testsupport::path_gg(n) - (n - 1 >= 3 ? testsupport::path_gg(n - 1) : 1);
    CHECK(p.delta_at(Mark{VertexId{n - 1}}) == step);
  }
}

TEST_CASE("family claim verification") {
  const auto u = verify_family_claims({"U"}, 1);
  CHECK(u.size() == 8);
  CHECK(std::all_of(u.begin(), u.end(), [](const ClaimRow& r) { return r.match; }));

  const auto z = verify_family_claims({"Zk"}, 0);
  REQUIRE(z.size() == 4);
  std::map<std::string, int> got;
  for (const auto& r : z) got[r.quantity] = r.computed;
  CHECK(got["gg"] == 6);
  CHECK(got["gg-v"] == 4);
  CHECK(got["ggp"] == 7);
  CHECK(got["ggp-v"] == 5);

  const auto a = verify_family_claims({"a"}, 0);
  REQUIRE(a.size() == 2);
  CHECK(a[0].computed == 3);
  CHECK(a[1].computed == 2);
  CHECK(a[0].match);
  CHECK(a[1].match);

  CHECK_THROWS_AS(verify_family_claims({"nope"}, 0), std::invalid_argument);
}

TEST_CASE("the ambiguous star-triangle claim reports both values") {
  const auto rows = verify_family_claims({"star-triangle"}, 0);
  REQUIRE_FALSE(rows.empty());
  bool noted = false;
  for (const auto& r : rows) {
    CHECK(r.match);
    if (r.note.find("computed ggp(G)=4 ggp(G-e)=3") != std::string::npos) noted = true;
  }
  CHECK(noted);
}

TEST_CASE("exhaustive scan up to order 5") {
  const ScanReport r = scan_impossibility(5);
  CHECK(r.ok());
  CHECK(r.graphs == 1 + 1 + 2 + 8 + 64 + 1024);
  for (const auto& name : bound_check_names()) CHECK(r.totals.count(name) == 1);
  for (const auto& name : impossibility_check_names()) CHECK(r.totals.count(name) == 1);
  CHECK_FALSE(r.edge_pairs_gg.empty());
  CHECK_FALSE(r.vertex_pairs_ggp.empty());
}

TEST_CASE("scans do not depend on the thread count") {
  ScanOptions one;
  one.threads = 1;
  one.keep_rows = true;
  ScanOptions three = one;
  three.threads = 3;
  const ScanReport a = scan_forest_inequality(5, 4, one);
  const ScanReport b = scan_forest_inequality(5, 4, three);
  std::ostringstream sa, sb;
  write_report_csv(sa, a);
  write_report_csv(sb, b);
  CHECK(sa.str() == sb.str());
  CHECK(scan_continuation(50, 8, one).rows.size() == scan_continuation(50, 8, three).rows.size());
}

TEST_CASE("forest scan") {
  CHECK(scan_forest_inequality(6, 10).ok());
}

TEST_CASE("oracle and continuation scans") {
  CHECK(scan_oracle_equivalence(4, 5).ok());
  const ScanReport c = scan_continuation(100, 8);
  CHECK(c.ok());
  CHECK(c.checks_run() == 100);
}

TEST_CASE("corpus of connected 4-vertex graphs") {
  std::set<std::string> classes;
  for (const Graph& g : labeled_graphs(4, true)) classes.insert(canonical_graph6(g));
  CHECK(classes.size() == 6);
  std::stringstream labeled_corpus;
  labeled_corpus << "# all labeled connected graphs on 4 vertices\n";
  for (const Graph& g : labeled_graphs(4, true)) labeled_corpus << write_graph6(g) << '\n';
  const ScanReport labeled = scan_corpus(labeled_corpus);
  CHECK(labeled.ok());
  CHECK(labeled.graphs == 38);

  std::stringstream iso_corpus;
  for (const auto& s : classes) iso_corpus << s << '\n';
  const ScanReport iso = scan_corpus(iso_corpus);
  CHECK(iso.ok());
  CHECK(iso.graphs == 6);
}

TEST_CASE("corpus edge cases") {
  std::stringstream empty;
  const ScanReport e = scan_corpus(empty);
  CHECK(e.ok());
  CHECK(e.graphs == 0);
  CHECK(e.checks_run() == 0);

  std::stringstream bad("A_\nC~\nnot graph6!\n\nBw\n");
  const ScanReport b = scan_corpus(bad);
  REQUIRE(b.parse_errors.size() == 1);
  CHECK(b.parse_errors[0].line == 3);
  CHECK(b.graphs == 3);
  CHECK(b.failures.empty());
  CHECK_FALSE(b.ok());
}

TEST_CASE("report CSV round trip") {
  ScanOptions opts;
  opts.keep_rows = true;
  const ScanReport r = scan_impossibility(3, opts);
  REQUIRE_FALSE(r.rows.empty());
  std::stringstream csv;
  write_report_csv(csv, r);
  const auto back = parse_report_rows(csv);
  REQUIRE(back.size() == r.rows.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].graph6 == r.rows[i].graph6);
    CHECK(back[i].check == r.rows[i].check);
    CHECK(back[i].pass == r.rows[i].pass);
    CHECK(back[i].gg == r.rows[i].gg);
    CHECK(back[i].ggp == r.rows[i].ggp);
    CHECK(back[i].gamma == r.rows[i].gamma);
    CHECK(back[i].detail == r.rows[i].detail);
  }
  CHECK(csv.str().find("# result: PASS") != std::string::npos);
}

TEST_CASE("CSV field quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(split_csv_line("x,\"a,\"\"b\"\"\",3") == std::vector<std::string>{"x", "a,\"b\"", "3"});
  std::stringstream bad_header("nope\n");
  CHECK_THROWS_AS(parse_report_rows(bad_header), ParseError);
}
