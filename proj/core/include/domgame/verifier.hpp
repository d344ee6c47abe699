#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "domgame/families.hpp"
#include "domgame/graph.hpp"
#include "domgame/solver.hpp"

namespace domgame {

/// Largest order check_graph and the spectra accept.
inline constexpr int kMaxCheckedOrder = 30;
/// Seed used when a caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 20140101;

/// Every game value the bound checks need: the graph itself and each
/// single-edge and single-vertex deletion.
struct GraphProfile {
  struct EdgeEntry {
    Edge edge;
    int gg;
    int ggp;
    int gamma;
  };
  struct VertexEntry {
    VertexId vertex;
    int gg;
    int ggp;
  };

  std::string graph6;
  int order = 0;
  int gg = 0;
  int ggp = 0;
  int gamma = 0;
  std::vector<EdgeEntry> edges;
  std::vector<VertexEntry> vertices;
};

/// Throws OrderLimitError above kMaxCheckedOrder.
GraphProfile profile_graph(const Graph& g);

struct CheckResult {
  std::string graph6;
  std::string check;
  bool pass = true;
  int gg = 0;
  int ggp = 0;
  int gamma = 0;
  /// Witness on failure: which edge/vertex/set and the offending values.
  std::string detail;
};

/// Bound checks: start-gap, sandwich, edge-removal, vertex-removal,
/// edge-domination-chain. One result per check.
std::vector<CheckResult> check_profile(const GraphProfile& p);
std::vector<CheckResult> check_graph(const Graph& g);

/// The small-value impossibility statements for edge and vertex removal,
/// grouped as edge-bullets-gg, edge-bullets-ggp, vertex-bullets-gg.
std::vector<CheckResult> check_impossibility(const GraphProfile& p);

const std::vector<std::string>& bound_check_names();
const std::vector<std::string>& impossibility_check_names();

enum class MarkKind { Edge, Vertex };

struct DeltaEntry {
  Mark mark;
  int removed = 0;
  /// value(G) - value(G - mark)
  int delta = 0;
};

struct DeltaSpectrum {
  MarkKind kind = MarkKind::Edge;
  Player variant = Player::Dominator;
  int base = 0;
  std::vector<DeltaEntry> entries;

  int min_delta() const;
  int max_delta() const;
  /// Delta for a specific mark; throws std::out_of_range if absent.
  int delta_at(const Mark& mark) const;
};

DeltaSpectrum edge_delta_spectrum(const Graph& g, Player variant);
DeltaSpectrum vertex_delta_spectrum(const Graph& g, Player variant);

struct ClaimRow {
  std::string family;
  int k = -1;
  /// gg, gg-e, gg-v, ggp, ggp-e, ggp-v
  std::string quantity;
  int claimed = 0;
  int computed = 0;
  bool match = false;
  std::string note;
};

/// Recomputes every claimed value. `names` may hold parametric family names
/// (evaluated for k = 0..k_max), exceptional construction names, exceptional
/// group letters "a".."g", "exceptional" for the whole catalog, or "all".
/// Throws std::invalid_argument on unknown names.
std::vector<ClaimRow> verify_family_claims(const std::vector<std::string>& names, int k_max);
/// Claim rows for one already-built instance.
std::vector<ClaimRow> verify_instance(const FamilyInstance& instance);

struct CheckTotals {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

struct ParseIssue {
  int line = 0;
  std::string message;
};

/// (value before, value after) -> count, over every removal scanned.
using PairHistogram = std::map<std::pair<int, int>, std::uint64_t>;

struct ScanReport {
  std::string corpus;
  std::uint64_t graphs = 0;
  std::map<std::string, CheckTotals> totals;
  std::vector<CheckResult> failures;
  /// Every result, only when ScanOptions::keep_rows is set.
  std::vector<CheckResult> rows;
  std::vector<ParseIssue> parse_errors;
  PairHistogram edge_pairs_gg;
  PairHistogram edge_pairs_ggp;
  PairHistogram vertex_pairs_gg;
  PairHistogram vertex_pairs_ggp;

  bool ok() const { return failures.empty() && parse_errors.empty(); }
  std::uint64_t checks_run() const;
  void add(const CheckResult& r, bool keep_row);
  /// Appends `other` after this report's entries.
  void merge(const ScanReport& other);
};

struct ScanOptions {
  /// 0 selects default_thread_count().
  unsigned threads = 0;
  std::uint64_t seed = kDefaultSeed;
  bool keep_rows = false;
};

/// hardware_concurrency(), capped by the DOMGAME_THREADS environment variable.
unsigned default_thread_count();

inline constexpr int kMaxScanOrder = 7;

/// All labeled graphs of order 0..n_max: bound checks plus impossibility
/// statements on every edge and vertex, with before/after histograms.
ScanReport scan_impossibility(int n_max, const ScanOptions& options = {});

/// Forest inequality gamma_g(F|S) <= gamma_g'(F|S) over every labeled tree of
/// order 1..n_max, for S empty and `samples` random subsets per tree.
ScanReport scan_forest_inequality(int n_max, int samples = 10, const ScanOptions& options = {});

/// One graph6 per line ('#' comments and blank lines skipped). Parse
/// failures are recorded with their line number and the scan continues.
ScanReport scan_corpus(std::istream& in, const ScanOptions& options = {});

/// Solver vs oracle_game_value on every labeled graph of order 0..n_max,
/// both starters, empty pre-set plus `samples` random pre-sets.
ScanReport scan_oracle_equivalence(int n_max, int samples = 20, const ScanOptions& options = {});

/// Random (graph, B subset of A, starter) trials checking
/// value(G|A) <= value(G|B). Graph orders are drawn from 1..max_order.
ScanReport scan_continuation(int trials, int max_order = 10, const ScanOptions& options = {});

}  // namespace domgame
