#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "domgame/domination.hpp"
#include "domgame/errors.hpp"
#include "domgame/families.hpp"
#include "domgame/graph_io.hpp"
#include "domgame/report.hpp"
#include "domgame/solver.hpp"
#include "domgame/verifier.hpp"

namespace domgame::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Graph input

struct GraphInput {
  std::string graph6;
  std::string edges;
  std::string family;
  int k = 0;
  int cycle = 0;
  int path = 0;

  CLI::Option* graph6_opt = nullptr;
  CLI::Option* edges_opt = nullptr;
  CLI::Option* family_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* cycle_opt = nullptr;
  CLI::Option* path_opt = nullptr;
};

void add_graph_options(CLI::App* app, GraphInput& input) {
  input.graph6_opt = app->add_option("--graph6", input.graph6, "Graph as a graph6 string");
  input.edges_opt = app->add_option("--edges", input.edges, "Edge-list file ('-' for stdin)");
  input.family_opt = app->add_option("--family", input.family,
                                     "Named construction: U V Y X Q Zk W, Z, or an exceptional name");
  input.k_opt = app->add_option("--k", input.k, "Family parameter")->check(CLI::NonNegativeNumber);
  input.cycle_opt = app->add_option("--cycle", input.cycle, "Cycle C_n")->check(CLI::Range(3, kMaxVertices));
  input.path_opt = app->add_option("--path", input.path, "Path P_n")->check(CLI::Range(1, kMaxVertices));
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

MarkedGraph find_named(const std::string& name, int k, bool k_given) {
  if (is_family_name(name)) return make_family(name, k).marked;
  if (k_given) throw UsageError("--k only applies to the parametric families U V Y X Q Zk W");
  if (name == "Z") return graph_Z();
  for (auto& inst : exceptional_constructions()) {
    if (inst.name == name) return std::move(inst.marked);
  }
  throw UsageError("unknown family '" + name + "'");
}

MarkedGraph resolve_graph(const GraphInput& input, std::istream& in) {
  const int given = static_cast<int>(input.graph6_opt->count() > 0) + static_cast<int>(input.edges_opt->count() > 0) +
                    static_cast<int>(input.family_opt->count() > 0) + static_cast<int>(input.cycle_opt->count() > 0) +
                    static_cast<int>(input.path_opt->count() > 0);
  if (given == 0) throw UsageError("no graph given (use --graph6, --edges, --family, --cycle or --path)");
  if (given > 1) throw UsageError("give exactly one of --graph6, --edges, --family, --cycle, --path");
  if (input.k_opt->count() > 0 && input.family_opt->count() == 0) throw UsageError("--k requires --family");

  MarkedGraph m;
  if (input.graph6_opt->count() > 0) {
    m.graph = parse_graph6(input.graph6);
  } else if (input.edges_opt->count() > 0) {
    m.graph = parse_edge_list(read_source(input.edges, in));
  } else if (input.family_opt->count() > 0) {
    m = find_named(input.family, input.k, input.k_opt->count() > 0);
  } else if (input.cycle_opt->count() > 0) {
    m.graph = cycle(input.cycle);
    m.labels = {{"z", 0}};
  } else {
    m.graph = path(input.path);
    m.labels = {{"z", 0}};
  }
  return m;
}

VertexSet parse_vertex_list(const std::string& text, const MarkedGraph& m) {
  VertexSet out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    VertexId v = -1;
    if (auto it = m.labels.find(token); it != m.labels.end()) {
      v = it->second;
    } else {
      std::size_t used = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw UsageError("unknown vertex or label '" + token + "'");
    }
    if (v < 0 || v >= m.graph.order()) throw UsageError("vertex " + token + " out of range");
    out.insert(v);
  }
  return out;
}

Player parse_role(const std::string& s) {
  if (s == "dominator") return Player::Dominator;
  if (s == "staller") return Player::Staller;
  throw UsageError("role must be 'dominator' or 'staller'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  GraphInput input;
  std::string variant = "both";
  std::string pre;
  bool gamma = false;
  bool csv = false;
};

int cmd_solve(const SolveArgs& a, std::istream& in, std::ostream& out) {
  const MarkedGraph m = resolve_graph(a.input, in);
  const VertexSet pre = parse_vertex_list(a.pre, m);
  Solver solver(m.graph);

  std::vector<std::pair<std::string, int>> values;
  if (a.variant == "both" || a.variant == "dominator") {
    values.emplace_back("gamma_g", solver.value(pre, Player::Dominator));
  }
  if (a.variant == "both" || a.variant == "staller") {
    values.emplace_back("gamma_g_prime", solver.value(pre, Player::Staller));
  }
  if (a.gamma) values.emplace_back("gamma", domination_number(m.graph));

  if (a.csv) {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i].first;
    out << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i].second;
    out << '\n';
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i].first << '=' << values[i].second;
    out << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// delta

struct DeltaArgs {
  GraphInput input;
  bool edge = false;
  bool vertex = false;
  std::string variant = "dominator";
  bool csv = false;
};

std::string mark_text(const Mark& mark) {
  if (const auto* e = std::get_if<Edge>(&mark)) return std::to_string(e->u) + "-" + std::to_string(e->v);
  if (const auto* v = std::get_if<VertexId>(&mark)) return std::to_string(*v);
  return "";
}

int cmd_delta(const DeltaArgs& a, std::istream& in, std::ostream& out) {
  const MarkedGraph m = resolve_graph(a.input, in);
  const Player variant = parse_role(a.variant);
  const bool by_vertex = a.vertex;
  const DeltaSpectrum s = by_vertex ? vertex_delta_spectrum(m.graph, variant) : edge_delta_spectrum(m.graph, variant);
  const char* value_name = variant == Player::Dominator ? "gamma_g" : "gamma_g_prime";

  if (a.csv) {
    out << "mark,removed,delta,marked\n";
    for (const auto& e : s.entries) {
      out << mark_text(e.mark) << ',' << e.removed << ',' << e.delta << ',' << (e.mark == m.mark ? "yes" : "no")
          << '\n';
    }
  } else {
    out << std::left << std::setw(10) << (by_vertex ? "vertex" : "edge") << std::setw(9) << "removed" << "delta\n";
    for (const auto& e : s.entries) {
      std::string label = mark_text(e.mark);
      if (e.mark == m.mark) label += '*';
      out << std::left << std::setw(10) << label << std::setw(9) << e.removed << std::showpos << e.delta
          << std::noshowpos << '\n';
    }
  }
  out << "# " << value_name << '=' << s.base << " min=" << s.min_delta() << " max=" << s.max_delta()
      << " entries=" << s.entries.size() << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string families;
  int k_max = 1;
  int scan = -1;
  int trees = -1;
  int samples = 10;
  std::string corpus;
  std::string report;
  bool csv = false;
  bool all_rows = false;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a, std::istream& in, std::ostream& out) {
  if (a.families.empty() && a.scan < 0 && a.trees < 0 && a.corpus.empty()) {
    throw UsageError("verify needs at least one of --families, --scan, --trees, --corpus");
  }
  ScanOptions options;
  options.seed = a.seed;
  options.threads = a.threads;
  options.keep_rows = a.all_rows;

  bool ok = true;
  std::ofstream report_file;
  if (!a.report.empty()) {
    report_file.open(a.report);
    if (!report_file) throw UsageError("cannot write report '" + a.report + "'");
  }

  if (!a.families.empty()) {
    const auto rows = verify_family_claims(split_list(a.families), a.k_max);
    if (a.csv) {
      write_claims_csv(out, rows);
    } else {
      write_claims_table(out, rows);
    }
    int mismatches = 0;
    for (const auto& r : rows) mismatches += r.match ? 0 : 1;
    out << "# claims: " << rows.size() << " checked, " << mismatches << " mismatched\n";
    if (report_file) write_claims_csv(report_file, rows);
    ok = ok && mismatches == 0;
  }

  auto emit = [&](const ScanReport& report) {
    if (a.csv) {
      write_report_csv(out, report);
    } else {
      for (const auto& f : report.failures) {
        out << "FAIL " << f.graph6 << ' ' << f.check << ": " << f.detail << '\n';
      }
      write_report_summary(out, report);
    }
    if (report_file) write_report_csv(report_file, report);
    ok = ok && report.ok();
  };

  if (a.scan >= 0) emit(scan_impossibility(a.scan, options));
  if (a.trees >= 0) emit(scan_forest_inequality(a.trees, a.samples, options));
  if (!a.corpus.empty()) {
    if (a.corpus == "-") {
      emit(scan_corpus(in, options));
    } else {
      std::ifstream file(a.corpus);
      if (!file) throw UsageError("cannot open corpus '" + a.corpus + "'");
      emit(scan_corpus(file, options));
    }
  }
  return ok ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// convert

struct ConvertArgs {
  GraphInput input;
  std::string to = "graph6";
  std::string output;
};

int cmd_convert(const ConvertArgs& a, std::istream& in, std::ostream& out) {
  const MarkedGraph m = resolve_graph(a.input, in);
  std::string text;
  if (a.to == "graph6") {
    text = write_graph6(m.graph) + "\n";
  } else if (a.to == "edge-list") {
    text = write_edge_list(m.graph);
  } else {
    throw UsageError("--to must be 'graph6' or 'edge-list'");
  }
  if (a.output.empty() || a.output == "-") {
    out << text;
  } else {
    std::ofstream file(a.output);
    if (!file) throw UsageError("cannot write '" + a.output + "'");
    file << text;
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------
// play

struct PlayArgs {
  GraphInput input;
  std::string role = "dominator";
  std::string pre;
  bool solver_first = false;
  bool show_eval = false;
};

struct PlaySession {
  Graph graph;
  Player human = Player::Dominator;
  std::vector<VertexId> history;
  GameState state;
};

int cmd_play(const PlayArgs& a, std::istream& in, std::ostream& out) {
  const MarkedGraph m = resolve_graph(a.input, in);
  PlaySession session;
  session.graph = m.graph;
  session.human = parse_role(a.role);
  const Player starter = a.solver_first ? other(session.human) : session.human;
  session.state = GameState{parse_vertex_list(a.pre, m), starter};
  if (session.state.dominated == session.graph.vertices()) throw UsageError("nothing left to dominate");

  Solver solver(session.graph);
  const int optimum = solver.value(session.state);
  const char* value_name = starter == Player::Dominator ? "gamma_g" : "gamma_g_prime";
  out << "You are " << to_string(session.human) << "; " << to_string(starter) << " moves first.\n";

  while (session.state.dominated != session.graph.vertices()) {
    out << "dominated: " << session.state.dominated.to_string() << '\n';
    const VertexSet legal = legal_moves(session.graph, session.state.dominated);
    VertexId move = -1;
    if (session.state.to_move == session.human) {
      out << "legal: " << legal.to_string() << '\n';
      while (move < 0) {
        out << "move> " << std::flush;
        std::string token;
        if (!(in >> token)) {
          out << "\naborted after " << session.history.size() << " moves\n";
          return kSuccess;
        }
        std::size_t used = 0;
        int v = -1;
        try {
          v = std::stoi(token, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != token.size() || v < 0 || v >= session.graph.order() || !legal.contains(v)) {
          out << "illegal move '" << token << "'; choose from " << legal.to_string() << '\n';
          continue;
        }
        move = v;
      }
    } else {
      move = solver.best_move(session.state).vertex;
    }
    session.state = apply_move(session.graph, session.state, move);
    session.history.push_back(move);
    out << "move " << session.history.size() << ": " << to_string(other(session.state.to_move)) << " plays "
        << move << '\n';
    if (a.show_eval && session.state.dominated != session.graph.vertices()) {
      out << "eval: " << solver.value(session.state) << " more moves under optimal play\n";
    }
  }
  out << "dominated: " << session.state.dominated.to_string() << '\n';
  out << "game over: total=" << session.history.size() << ' ' << value_name << '=' << optimum << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver and verification harness for the domination game"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Game domination numbers of one graph");
  add_graph_options(solve_cmd, solve.input);
  solve_cmd->add_option("--variant", solve.variant, "both, dominator or staller")
      ->check(CLI::IsMember({"both", "dominator", "staller"}));
  solve_cmd->add_option("--pre", solve.pre, "Comma-separated pre-dominated vertices or labels");
  solve_cmd->add_flag("--gamma", solve.gamma, "Also print the domination number");
  solve_cmd->add_flag("--csv", solve.csv, "Machine-readable output");

  DeltaArgs delta;
  auto* delta_cmd = app.add_subcommand("delta", "Change in game value over single edge or vertex removals");
  add_graph_options(delta_cmd, delta.input);
  auto* edge_flag = delta_cmd->add_flag("--edge", delta.edge, "Remove each edge (default)");
  auto* vertex_flag = delta_cmd->add_flag("--vertex", delta.vertex, "Remove each vertex");
  edge_flag->excludes(vertex_flag);
  delta_cmd->add_option("--variant", delta.variant, "dominator or staller start")
      ->check(CLI::IsMember({"dominator", "staller"}));
  delta_cmd->add_flag("--csv", delta.csv, "Machine-readable output");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Family claims, exhaustive scans and corpus checks");
  verify_cmd->add_option("--families", verify.families, "Comma-separated names, 'exceptional', or 'all'");
  verify_cmd->add_option("--k-max", verify.k_max, "Largest family parameter")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--scan", verify.scan, "Exhaustive labeled-graph scan up to this order")
      ->check(CLI::Range(0, kMaxScanOrder));
  verify_cmd->add_option("--trees", verify.trees, "Forest-inequality scan up to this tree order")
      ->check(CLI::Range(1, 8));
  verify_cmd->add_option("--samples", verify.samples, "Random pre-dominated sets per tree")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--corpus", verify.corpus, "graph6 corpus file ('-' for stdin)");
  verify_cmd->add_option("--report", verify.report, "Also write CSV report(s) to this path");
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (default: DOMGAME_THREADS or all cores)");
  verify_cmd->add_flag("--csv", verify.csv, "Machine-readable output");
  verify_cmd->add_flag("--all-rows", verify.all_rows, "Emit every check row, not only failures");

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between graph6 and edge-list formats");
  add_graph_options(convert_cmd, convert.input);
  convert_cmd->add_option("--to", convert.to, "graph6 or edge-list")->check(CLI::IsMember({"graph6", "edge-list"}));
  convert_cmd->add_option("-o,--output", convert.output, "Output path (default stdout)");

  PlayArgs play;
  auto* play_cmd = app.add_subcommand("play", "Play against the optimal solver in the terminal");
  add_graph_options(play_cmd, play.input);
  play_cmd->add_option("--as", play.role, "dominator or staller")->check(CLI::IsMember({"dominator", "staller"}));
  play_cmd->add_option("--pre", play.pre, "Comma-separated pre-dominated vertices or labels");
  play_cmd->add_flag("--solver-first", play.solver_first, "Let the solver make the first move");
  play_cmd->add_flag("--show-eval", play.show_eval, "Print the optimal remaining move count after each move");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve, in, out);
    if (delta_cmd->parsed()) return cmd_delta(delta, in, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, in, out);
    if (convert_cmd->parsed()) return cmd_convert(convert, in, out);
    if (play_cmd->parsed()) return cmd_play(play, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace domgame::cli
