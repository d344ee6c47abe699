#include "domgame/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "domgame/domination.hpp"
#include "domgame/enumerate.hpp"
#include "domgame/errors.hpp"
#include "domgame/graph_io.hpp"

namespace domgame {

namespace {

std::string edge_text(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

CheckResult make_result(const GraphProfile& p, std::string check) {
  CheckResult r;
  r.graph6 = p.graph6;
  r.check = std::move(check);
  r.gg = p.gg;
  r.ggp = p.ggp;
  r.gamma = p.gamma;
  return r;
}

void fail(CheckResult& r, const std::string& witness) {
  r.pass = false;
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += witness;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-item generator so results do not depend on how work is split.
std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return std::mt19937_64(splitmix(seed ^ splitmix(stream * 0x100000001b3ULL + index)));
}

VertexSet random_subset(std::mt19937_64& rng, int n) {
  return VertexSet(rng()) & VertexSet::full(n);
}

// Splits [0, count) into chunks handed to `threads` workers; the per-chunk
// reports are merged in chunk order so output is independent of scheduling.
template <typename Work>
ScanReport run_chunked(std::uint64_t count, unsigned threads, Work work) {
  if (threads == 0) threads = default_thread_count();
  const std::uint64_t chunk_count = std::max<std::uint64_t>(1, std::min<std::uint64_t>(count, threads * 16ULL));
  const std::uint64_t chunk_size = (count + chunk_count - 1) / std::max<std::uint64_t>(chunk_count, 1);
  std::vector<ScanReport> partial(chunk_count);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t chunk = next.fetch_add(1);
      if (chunk >= chunk_count || failed.load()) return;
      const std::uint64_t begin = chunk * chunk_size;
      const std::uint64_t end = std::min(count, begin + chunk_size);
      try {
        partial[chunk] = work(begin, end);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  const unsigned spawned = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunk_count));
  if (spawned <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(spawned);
    for (unsigned i = 0; i < spawned; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  ScanReport merged;
  for (const auto& p : partial) merged.merge(p);
  return merged;
}

void add_histograms(ScanReport& report, const GraphProfile& p) {
  for (const auto& e : p.edges) {
    ++report.edge_pairs_gg[{p.gg, e.gg}];
    ++report.edge_pairs_ggp[{p.ggp, e.ggp}];
  }
  for (const auto& v : p.vertices) {
    ++report.vertex_pairs_gg[{p.gg, v.gg}];
    ++report.vertex_pairs_ggp[{p.ggp, v.ggp}];
  }
}

void merge_histogram(PairHistogram& into, const PairHistogram& from) {
  for (const auto& [key, count] : from) into[key] += count;
}

void require_checkable(const Graph& g, const char* what) {
  if (g.order() > kMaxCheckedOrder) throw OrderLimitError(what, g.order(), kMaxCheckedOrder);
}

}  // namespace

unsigned default_thread_count() {
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DOMGAME_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) threads = std::min(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

// ---------------------------------------------------------------------------
// Profiles and checks

GraphProfile profile_graph(const Graph& g) {
  require_checkable(g, "profile_graph");
  GraphProfile p;
  p.graph6 = write_graph6(g);
  p.order = g.order();
  {
    Solver solver(g);
    p.gg = solver.value(VertexSet{}, Player::Dominator);
    p.ggp = solver.value(VertexSet{}, Player::Staller);
  }
  p.gamma = domination_number(g);
  for (Edge e : g.edges()) {
    const Graph h = without_edge(g, e);
    Solver solver(h);
    p.edges.push_back({e, solver.value(VertexSet{}, Player::Dominator),
                       solver.value(VertexSet{}, Player::Staller), domination_number(h)});
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    const Graph h = remove_vertex(g, v).graph;
    Solver solver(h);
    p.vertices.push_back({v, solver.value(VertexSet{}, Player::Dominator),
                          solver.value(VertexSet{}, Player::Staller)});
  }
  return p;
}

const std::vector<std::string>& bound_check_names() {
  static const std::vector<std::string> names = {"start-gap", "sandwich", "edge-removal", "vertex-removal",
                                                 "edge-domination-chain"};
  return names;
}

const std::vector<std::string>& impossibility_check_names() {
  static const std::vector<std::string> names = {"edge-bullets-gg", "edge-bullets-ggp", "vertex-bullets-gg"};
  return names;
}

std::vector<CheckResult> check_profile(const GraphProfile& p) {
  std::vector<CheckResult> out;

  CheckResult gap = make_result(p, "start-gap");
  if (std::abs(p.gg - p.ggp) > 1) fail(gap, "|gg-ggp|=" + std::to_string(std::abs(p.gg - p.ggp)));
  out.push_back(gap);

  CheckResult sandwich = make_result(p, "sandwich");
  if (p.order > 0 && (p.gamma > p.gg || p.gg > 2 * p.gamma - 1)) {
    fail(sandwich, "gamma=" + std::to_string(p.gamma) + " gg=" + std::to_string(p.gg));
  }
  out.push_back(sandwich);

  CheckResult edge = make_result(p, "edge-removal");
  for (const auto& e : p.edges) {
    if (std::abs(p.gg - e.gg) > 2) fail(edge, "e=" + edge_text(e.edge) + " gg(G-e)=" + std::to_string(e.gg));
    if (std::abs(p.ggp - e.ggp) > 2) fail(edge, "e=" + edge_text(e.edge) + " ggp(G-e)=" + std::to_string(e.ggp));
  }
  out.push_back(edge);

  CheckResult vertex = make_result(p, "vertex-removal");
  for (const auto& v : p.vertices) {
    if (p.gg - v.gg > 2) fail(vertex, "v=" + std::to_string(v.vertex) + " gg(G-v)=" + std::to_string(v.gg));
    if (p.ggp - v.ggp > 2) fail(vertex, "v=" + std::to_string(v.vertex) + " ggp(G-v)=" + std::to_string(v.ggp));
  }
  out.push_back(vertex);

  CheckResult chain = make_result(p, "edge-domination-chain");
  const int floor_from_gg = (p.gg + 2) / 2;  // ceil((gg + 1) / 2)
  if (p.order > 0 && p.gamma < floor_from_gg) {
    fail(chain, "gamma=" + std::to_string(p.gamma) + " < ceil((gg+1)/2)=" + std::to_string(floor_from_gg));
  }
  for (const auto& e : p.edges) {
    if (e.gg < e.gamma || e.gamma < p.gamma) {
      fail(chain, "e=" + edge_text(e.edge) + " gg(G-e)=" + std::to_string(e.gg) +
                      " gamma(G-e)=" + std::to_string(e.gamma));
    }
  }
  out.push_back(chain);
  return out;
}

std::vector<CheckResult> check_graph(const Graph& g) { return check_profile(profile_graph(g)); }

std::vector<CheckResult> check_impossibility(const GraphProfile& p) {
  std::vector<CheckResult> out;

  CheckResult edge_gg = make_result(p, "edge-bullets-gg");
  for (const auto& e : p.edges) {
    const auto witness = [&](const char* rule) {
      fail(edge_gg, std::string(rule) + " at e=" + edge_text(e.edge) + " gg(G-e)=" + std::to_string(e.gg));
    };
    if (p.gg == 1 && e.gg > 2) witness("gg=1 => gg(G-e)<=2");
    if (p.gg == 2 && e.gg > 3) witness("gg=2 => gg(G-e)<=3");
    if (p.gg >= 2 && e.gg < 2) witness("gg>=2 => gg(G-e)>=2");
    if (p.gg >= 4 && e.gg < 3) witness("gg>=4 => gg(G-e)>=3");
  }
  out.push_back(edge_gg);

  CheckResult edge_ggp = make_result(p, "edge-bullets-ggp");
  for (const auto& e : p.edges) {
    const auto witness = [&](const char* rule) {
      fail(edge_ggp, std::string(rule) + " at e=" + edge_text(e.edge) + " ggp(G-e)=" + std::to_string(e.ggp));
    };
    if (p.ggp == 1 && e.ggp != 2) witness("ggp=1 => ggp(G-e)=2");
    if (p.ggp == 2 && e.ggp > 3) witness("ggp=2 => ggp(G-e)<=3");
    if (p.ggp == 3 && e.ggp > 4) witness("ggp=3 => ggp(G-e)<=4");
    if (e.ggp < 2) witness("ggp(G-e)>=2");
    if (p.ggp == 3 && e.ggp < 3) witness("ggp=3 => ggp(G-e)>=3");
    if (p.ggp == 4 && e.ggp < 3) witness("ggp=4 => ggp(G-e)>=3");
    if (p.ggp == 5 && e.ggp < 4) witness("ggp=5 => ggp(G-e)>=4");
  }
  out.push_back(edge_ggp);

  CheckResult vertex_gg = make_result(p, "vertex-bullets-gg");
  for (const auto& v : p.vertices) {
    if (p.gg == 4 && v.gg == 2) fail(vertex_gg, "gg=4 and gg(G-v)=2 at v=" + std::to_string(v.vertex));
    if (p.gg == 3 && v.gg == 1) fail(vertex_gg, "gg=3 and gg(G-v)=1 at v=" + std::to_string(v.vertex));
  }
  out.push_back(vertex_gg);
  return out;
}

// ---------------------------------------------------------------------------
// Delta spectra

int DeltaSpectrum::min_delta() const {
  int m = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) m = i == 0 ? entries[i].delta : std::min(m, entries[i].delta);
  return m;
}

int DeltaSpectrum::max_delta() const {
  int m = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) m = i == 0 ? entries[i].delta : std::max(m, entries[i].delta);
  return m;
}

int DeltaSpectrum::delta_at(const Mark& mark) const {
  for (const auto& e : entries) {
    if (e.mark == mark) return e.delta;
  }
  throw std::out_of_range("mark not present in spectrum");
}

DeltaSpectrum edge_delta_spectrum(const Graph& g, Player variant) {
  require_checkable(g, "edge_delta_spectrum");
  DeltaSpectrum s;
  s.kind = MarkKind::Edge;
  s.variant = variant;
  s.base = game_value(g, GameState{VertexSet{}, variant});
  for (Edge e : g.edges()) {
    const int removed = game_value(without_edge(g, e), GameState{VertexSet{}, variant});
    s.entries.push_back({e, removed, s.base - removed});
  }
  return s;
}

DeltaSpectrum vertex_delta_spectrum(const Graph& g, Player variant) {
  require_checkable(g, "vertex_delta_spectrum");
  DeltaSpectrum s;
  s.kind = MarkKind::Vertex;
  s.variant = variant;
  s.base = game_value(g, GameState{VertexSet{}, variant});
  for (VertexId v = 0; v < g.order(); ++v) {
    const int removed = game_value(remove_vertex(g, v).graph, GameState{VertexSet{}, variant});
    s.entries.push_back({v, removed, s.base - removed});
  }
  return s;
}

// ---------------------------------------------------------------------------
// Family claims

std::vector<ClaimRow> verify_instance(const FamilyInstance& instance) {
  std::vector<ClaimRow> rows;
  const ClaimedValues& c = instance.claims;
  const bool want_removed = c.gg_removed || c.ggp_removed;
  const std::string suffix = instance.marked.has_vertex_mark() ? "-v" : "-e";

  Solver whole(instance.marked.graph);
  std::optional<Solver> removed;
  if (want_removed) removed.emplace(instance.marked.removed());

  auto row = [&](const std::string& quantity, int claimed, int computed) {
    rows.push_back({instance.name, instance.k, quantity, claimed, computed, claimed == computed, c.note});
  };
  if (c.gg) row("gg", *c.gg, whole.value(VertexSet{}, Player::Dominator));
  if (c.gg_removed) row("gg" + suffix, *c.gg_removed, removed->value(VertexSet{}, Player::Dominator));
  if (c.ggp) row("ggp", *c.ggp, whole.value(VertexSet{}, Player::Staller));
  if (c.ggp_removed) row("ggp" + suffix, *c.ggp_removed, removed->value(VertexSet{}, Player::Staller));

  if (!c.note.empty() && c.ggp && c.ggp_removed) {
    // Ambiguous claim: report both computed values alongside the rows.
    const int on_whole = whole.value(VertexSet{}, Player::Staller);
    const int on_removed = removed->value(VertexSet{}, Player::Staller);
    for (auto& r : rows) {
      r.note += " | computed ggp(G)=" + std::to_string(on_whole) + " ggp(G" + suffix + ")=" +
                std::to_string(on_removed);
    }
  }
  return rows;
}

std::vector<ClaimRow> verify_family_claims(const std::vector<std::string>& names, int k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  std::vector<FamilyInstance> exceptional;
  auto catalog = [&]() -> const std::vector<FamilyInstance>& {
    if (exceptional.empty()) exceptional = exceptional_constructions();
    return exceptional;
  };

  std::vector<ClaimRow> rows;
  auto run_family = [&](const std::string& name) {
    for (int k = 0; k <= k_max; ++k) {
      auto r = verify_instance(make_family(name, k));
      rows.insert(rows.end(), r.begin(), r.end());
    }
  };
  auto run_exceptional = [&](auto&& keep) {
    bool any = false;
    for (const auto& inst : catalog()) {
      if (!keep(inst)) continue;
      any = true;
      auto r = verify_instance(inst);
      rows.insert(rows.end(), r.begin(), r.end());
    }
    return any;
  };

  for (const auto& name : names) {
    if (name == "all") {
      for (const auto& f : family_names()) run_family(f);
      run_exceptional([](const FamilyInstance&) { return true; });
    } else if (is_family_name(name)) {
      run_family(name);
    } else if (name == "exceptional") {
      run_exceptional([](const FamilyInstance&) { return true; });
    } else if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'g') {
      run_exceptional([&](const FamilyInstance& f) { return f.group == name[0]; });
    } else if (!run_exceptional([&](const FamilyInstance& f) { return f.name == name; })) {
      throw std::invalid_argument("unknown family or construction '" + name + "'");
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Reports

std::uint64_t ScanReport::checks_run() const {
  std::uint64_t total = 0;
  for (const auto& [name, t] : totals) total += t.passed + t.failed;
  return total;
}

void ScanReport::add(const CheckResult& r, bool keep_row) {
  auto& t = totals[r.check];
  if (r.pass) {
    ++t.passed;
  } else {
    ++t.failed;
    failures.push_back(r);
  }
  if (keep_row) rows.push_back(r);
}

void ScanReport::merge(const ScanReport& other) {
  if (corpus.empty()) corpus = other.corpus;
  graphs += other.graphs;
  for (const auto& [name, t] : other.totals) {
    totals[name].passed += t.passed;
    totals[name].failed += t.failed;
  }
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  parse_errors.insert(parse_errors.end(), other.parse_errors.begin(), other.parse_errors.end());
  merge_histogram(edge_pairs_gg, other.edge_pairs_gg);
  merge_histogram(edge_pairs_ggp, other.edge_pairs_ggp);
  merge_histogram(vertex_pairs_gg, other.vertex_pairs_gg);
  merge_histogram(vertex_pairs_ggp, other.vertex_pairs_ggp);
}

// ---------------------------------------------------------------------------
// Scans

ScanReport scan_impossibility(int n_max, const ScanOptions& options) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  if (n_max > kMaxScanOrder) throw OrderLimitError("scan_impossibility", n_max, kMaxScanOrder);
  ScanReport report;
  report.corpus = "all labeled graphs, order 0.." + std::to_string(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
    report.merge(run_chunked(masks, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
      ScanReport part;
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        const GraphProfile p = profile_graph(graph_from_edge_mask(n, mask));
        ++part.graphs;
        for (const auto& r : check_profile(p)) part.add(r, options.keep_rows);
        for (const auto& r : check_impossibility(p)) part.add(r, options.keep_rows);
        add_histograms(part, p);
      }
      return part;
    }));
  }
  return report;
}

ScanReport scan_forest_inequality(int n_max, int samples, const ScanOptions& options) {
  if (n_max > kMaxEnumeratedTreeOrder) throw OrderLimitError("scan_forest_inequality", n_max, kMaxEnumeratedTreeOrder);
  if (samples < 0) throw std::invalid_argument("samples must be >= 0");
  ScanReport report;
  report.corpus = "all labeled trees, order 1.." + std::to_string(n_max) + ", " + std::to_string(samples) +
                  " random pre-dominated sets each";
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<Graph> trees = labeled_trees(n);
    report.merge(run_chunked(trees.size(), options.threads, [&](std::uint64_t begin, std::uint64_t end) {
      ScanReport part;
      for (std::uint64_t i = begin; i < end; ++i) {
        const Graph& tree = trees[i];
        Solver solver(tree);
        auto rng = item_rng(options.seed, 0x7ee5 + static_cast<std::uint64_t>(n), i);
        CheckResult r;
        r.graph6 = write_graph6(tree);
        r.check = "forest-inequality";
        r.gg = solver.value(VertexSet{}, Player::Dominator);
        r.ggp = solver.value(VertexSet{}, Player::Staller);
        r.gamma = domination_number(tree);
        for (int s = 0; s <= samples; ++s) {
          const VertexSet pre = s == 0 ? VertexSet{} : random_subset(rng, n);
          const int d = s == 0 ? r.gg : solver.value(pre, Player::Dominator);
          const int st = s == 0 ? r.ggp : solver.value(pre, Player::Staller);
          if (d > st) fail(r, "S=" + pre.to_string() + " gg=" + std::to_string(d) + " ggp=" + std::to_string(st));
        }
        ++part.graphs;
        part.add(r, options.keep_rows);
      }
      return part;
    }));
  }
  return report;
}

ScanReport scan_corpus(std::istream& in, const ScanOptions& options) {
  ScanReport report;
  report.corpus = "graph6 corpus";
  std::vector<std::pair<int, Graph>> graphs;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    try {
      Graph g = parse_graph6(std::string_view(line).substr(first, last - first + 1));
      if (g.order() > kMaxCheckedOrder) {
        report.parse_errors.push_back({number, "order " + std::to_string(g.order()) + " exceeds limit " +
                                                   std::to_string(kMaxCheckedOrder)});
        continue;
      }
      graphs.emplace_back(number, std::move(g));
    } catch (const ParseError& e) {
      report.parse_errors.push_back({number, e.what()});
    }
  }
  report.merge(run_chunked(graphs.size(), options.threads, [&](std::uint64_t begin, std::uint64_t end) {
    ScanReport part;
    for (std::uint64_t i = begin; i < end; ++i) {
      const GraphProfile p = profile_graph(graphs[i].second);
      ++part.graphs;
      for (const auto& r : check_profile(p)) part.add(r, options.keep_rows);
      add_histograms(part, p);
    }
    return part;
  }));
  return report;
}

ScanReport scan_oracle_equivalence(int n_max, int samples, const ScanOptions& options) {
  if (n_max > kMaxEnumeratedGraphOrder) throw OrderLimitError("scan_oracle_equivalence", n_max, kMaxEnumeratedGraphOrder);
  ScanReport report;
  report.corpus = "oracle equivalence, all labeled graphs order 0.." + std::to_string(n_max);
  for (int n = 0; n <= n_max; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
    report.merge(run_chunked(masks, options.threads, [&](std::uint64_t begin, std::uint64_t end) {
      ScanReport part;
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        const Graph g = graph_from_edge_mask(n, mask);
        Solver solver(g);
        auto rng = item_rng(options.seed, 0x0ac1e + static_cast<std::uint64_t>(n), mask);
        CheckResult r;
        r.graph6 = write_graph6(g);
        r.check = "oracle-equivalence";
        r.gg = solver.value(VertexSet{}, Player::Dominator);
        r.ggp = solver.value(VertexSet{}, Player::Staller);
        r.gamma = domination_number(g);
        for (int s = 0; s <= samples; ++s) {
          const VertexSet pre = s == 0 ? VertexSet{} : random_subset(rng, n);
          for (Player p : {Player::Dominator, Player::Staller}) {
            const int fast = solver.value(pre, p);
            const int slow = oracle_game_value(g, GameState{pre, p});
            if (fast != slow) {
              fail(r, "S=" + pre.to_string() + " " + std::string(to_string(p)) + " solver=" + std::to_string(fast) +
                          " oracle=" + std::to_string(slow));
            }
          }
        }
        ++part.graphs;
        part.add(r, options.keep_rows);
      }
      return part;
    }));
  }
  return report;
}

ScanReport scan_continuation(int trials, int max_order, const ScanOptions& options) {
  if (max_order < 1 || max_order > kMaxCheckedOrder) {
    throw std::invalid_argument("max_order must be in 1.." + std::to_string(kMaxCheckedOrder));
  }
  ScanReport report;
  report.corpus = std::to_string(trials) + " random continuation trials, order <= " + std::to_string(max_order);
  report.merge(run_chunked(static_cast<std::uint64_t>(std::max(trials, 0)), options.threads,
                           [&](std::uint64_t begin, std::uint64_t end) {
    ScanReport part;
    for (std::uint64_t i = begin; i < end; ++i) {
      auto rng = item_rng(options.seed, 0xc0de, i);
      const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_order));
      const Graph g = graph_from_edge_mask(n, pair_count(n) == 0 ? 0 : rng() & ((std::uint64_t{1} << pair_count(n)) - 1));
      const VertexSet b = random_subset(rng, n);
      const VertexSet a = b | random_subset(rng, n);
      const Player starter = (rng() & 1U) ? Player::Staller : Player::Dominator;
      Solver solver(g);
      CheckResult r;
      r.graph6 = write_graph6(g);
      r.check = "continuation";
      r.gg = solver.value(VertexSet{}, Player::Dominator);
      r.ggp = solver.value(VertexSet{}, Player::Staller);
      r.gamma = domination_number(g);
      const int with_a = solver.value(a, starter);
      const int with_b = solver.value(b, starter);
      r.detail = "A=" + a.to_string() + " B=" + b.to_string() + " " + std::string(to_string(starter)) +
                 " value(A)=" + std::to_string(with_a) + " value(B)=" + std::to_string(with_b);
      r.pass = with_a <= with_b;
      ++part.graphs;
      part.add(r, options.keep_rows);
    }
    return part;
  }));
  return report;
}

}  // namespace domgame
