#include "qgg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qgg/graph_io.hpp"
#include "qgg/harness.hpp"
#include "qgg/reduce.hpp"
#include "qgg/theorems.hpp"

namespace qgg {

using nlohmann::json;

namespace {

struct RunConfig {
  std::string input;
  std::string output_path;
  std::string method = "elim";
  std::string tower = "exact";
  std::string gain_set = "lipschitz";
  std::string output = "text";
  std::string suite;
  double tol = kDefaultTolerance;
  std::optional<std::size_t> max_n;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  bool normalize_gains = false;
  bool tower_given = false;

  bool json() const { return output == "json"; }
  bool floating() const { return tower == "float"; }
};

/// Input or output problem that maps to the usage exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <Scalar T>
GainGraph<T> load(const RunConfig& cfg) {
  ParseOptions opts;
  opts.normalize_gains = cfg.normalize_gains;
  return parse_graph_string<T>(read_input(cfg.input), opts);
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v + 1);
  return s;
}

json one_indexed(const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

std::string shape_text(const Shape& s) {
  std::string p;
  for (std::size_t x : s.params) p += (p.empty() ? "" : ",") + std::to_string(x);
  return to_string(s.family) + (p.empty() ? "" : "(" + p + ")");
}

// ---- commands ------------------------------------------------------------------

template <Scalar T>
int cmd_rank(const RunConfig& cfg, std::ostream& out) {
  const auto g = load<T>(cfg);
  const RankMethod method = parse_rank_method(cfg.method);
  const auto a = adjacency_matrix(g);
  json j{{"n", g.order()}, {"m", g.size()}, {"method", to_string(method)}, {"tower", cfg.tower}};
  if (cfg.floating()) j["tol"] = cfg.tol;
  int code = kExitOk;
  if (method == RankMethod::both) {
    const std::size_t e = left_row_rank_eliminate(a, cfg.tol).rank;
    const std::size_t d = rank_via_adjoint(a, cfg.tol).rank;
    j["rank"] = e;
    j["ranks"] = {{"elim", e}, {"adjoint", d}};
    j["agree"] = e == d;
    if (e != d) code = kExitDisagree;
  } else {
    j["rank"] = matrix_rank(a, method, cfg.tol).rank;
  }
  if (cfg.json()) {
    out << j.dump(2) << "\n";
  } else {
    out << "rank " << j["rank"].get<std::size_t>() << "\n";
    if (method == RankMethod::both)
      out << "elim " << j["ranks"]["elim"].get<std::size_t>() << "\nadjoint "
          << j["ranks"]["adjoint"].get<std::size_t>() << "\nagree " << (code == kExitOk ? "yes" : "no") << "\n";
  }
  return code;
}

template <Scalar T>
int cmd_girth(const RunConfig& cfg, std::ostream& out) {
  const auto g = load<T>(cfg);
  const auto gr = girth(g);
  std::optional<CycleType> type;
  if (gr.girth) type = decide_cycle_type(g, gr.cycle);
  if (cfg.json()) {
    out << json{{"g", gr.girth ? json(*gr.girth) : json(nullptr)},
                {"cycle", one_indexed(gr.cycle)},
                {"type", type ? json(to_string(*type)) : json(nullptr)}}
               .dump(2)
        << "\n";
  } else if (gr.girth) {
    out << "girth " << *gr.girth << "\ncycle " << vertex_list(gr.cycle) << "\ntype " << to_string(*type) << "\n";
  } else {
    out << "girth none\n";
  }
  return kExitOk;
}

template <Scalar T>
int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const auto g = load<T>(cfg);
  const auto rep = classify(g, parse_rank_method(cfg.method), cfg.tol);
  if (cfg.json()) {
    out << to_json(rep).dump(2) << "\n";
  } else {
    out << "g " << (rep.girth ? std::to_string(*rep.girth) : "none") << "\n"
        << "rank " << rep.rank << "\n"
        << "relation " << rep.relation << "\n"
        << "case " << rep.matched_case << "\n"
        << "shape " << shape_text(rep.shape) << "\n";
    for (const auto& alt : rep.shape.alternatives) out << "also " << shape_text(alt) << "\n";
    out << "shortest cycle " << vertex_list(rep.shortest_cycle) << " ("
        << (rep.shortest_cycle_type ? to_string(*rep.shortest_cycle_type) : "?") << ")\n";
    for (const auto& v : rep.verdicts)
      out << (v.agrees ? "ok   " : "FAIL ") << v.label << ": predicted " << v.predicted.describe() << "\n";
    for (const auto& n : rep.notes) out << "note " << n << "\n";
  }
  return rep.prediction_agrees ? kExitOk : kExitDisagree;
}

template <Scalar T>
int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  const auto g = load<T>(cfg);
  const auto red = reduced_graph(g);
  const auto trim = trim_pendant_pairs(g);
  std::vector<Vertex> removed = red.removed;
  if (cfg.json()) {
    json ledger = json::array();
    for (auto [p, q] : trim.ledger) ledger.push_back({p + 1, q + 1});
    out << json{{"graph", emit_graph(red.graph.graph)},
                {"n", red.graph.graph.order()},
                {"m", red.graph.graph.size()},
                {"origin", one_indexed(red.graph.origin)},
                {"removed", one_indexed(removed)},
                {"pendant_pairs", trim.pairs},
                {"pendant_ledger", ledger}}
               .dump(2)
        << "\n";
  } else {
    out << emit_graph(red.graph.graph);
    out << "# origin " << vertex_list(red.graph.origin) << "\n";
    out << "# removed " << (removed.empty() ? "none" : vertex_list(removed)) << "\n";
    out << "# pendant pairs " << trim.pairs << "\n";
  }
  return kExitOk;
}

int cmd_random(const RunConfig& cfg, std::ostream& out) {
  std::istringstream in(read_input(cfg.input));
  const SimpleGraph base = parse_underlying(in);
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32)};
  Rng rng(seq);
  std::string text;
  if (cfg.floating()) {
    FloatGraph g(base.order());
    for (auto [u, v] : base.edges())
      g.add_edge(u, v,
                 cfg.gain_set == "uniform" ? random_uniform_unit(rng) : random_lipschitz_unit<double>(rng));
    text = emit_graph(g);
  } else {
    ExactGraph g(base.order());
    for (auto [u, v] : base.edges()) g.add_edge(u, v, random_lipschitz_unit<Rational>(rng));
    text = emit_graph(g);
  }
  if (cfg.json())
    out << json{{"graph", text}, {"seed", cfg.seed}, {"gain_set", cfg.gain_set}, {"tower", cfg.tower}}.dump(2)
        << "\n";
  else
    out << text;
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  HarnessConfig h;
  h.max_n = cfg.max_n;
  h.samples = cfg.samples;
  h.seed = cfg.seed;
  h.method = parse_rank_method(cfg.method);
  h.tower = cfg.floating() ? Tower::floating : Tower::exact;
  h.gain_set = cfg.gain_set == "uniform" ? GainSet::uniform : GainSet::lipschitz;
  h.tol = cfg.tol;
  // Witnesses sit next to the report.
  const std::filesystem::path report_dir =
      cfg.output_path.empty() ? std::filesystem::current_path()
                              : std::filesystem::absolute(cfg.output_path).parent_path();
  h.witness_dir = (report_dir / "qgg-witnesses").string();
  const auto rep = run_suite(cfg.suite, h);
  if (cfg.json()) {
    out << rep.json.dump(2) << "\n";
  } else {
    for (const auto& c : rep.json["checks"]) {
      out << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << " ("
          << c["checked"].get<std::size_t>() << " checked, " << c["failures"].get<std::size_t>() << " failed)\n";
      for (const auto& m : c["messages"]) out << "  " << m.get<std::string>() << "\n";
      for (const auto& f : c["witness_files"]) out << "  witness " << f.get<std::string>() << "\n";
    }
    if (rep.json.contains("corpus")) {
      const auto& k = rep.json["corpus"];
      out << "corpus n<=" << k["max_n"] << ": " << k["graphs"] << " graphs, " << k["instances"]
          << " instances, " << k["ambiguous"] << " ambiguous, " << k["unmatched_girth4_rank4"]
          << " girth-4 rank-4 instances outside the sufficient cases\n";
    }
    out << (rep.passed ? "suite " + cfg.suite + ": pass\n" : "suite " + cfg.suite + ": FAIL\n");
  }
  return rep.passed ? kExitOk : kExitDisagree;
}

template <Scalar T>
int dispatch_graph(const std::string& command, const RunConfig& cfg, std::ostream& out) {
  if (command == "rank") return cmd_rank<T>(cfg, out);
  if (command == "girth") return cmd_girth<T>(cfg, out);
  if (command == "classify") return cmd_classify<T>(cfg, out);
  return cmd_reduce<T>(cfg, out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank and girth computations for quaternion unit gain graphs", "qgg"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "Rank oracle")->check(CLI::IsMember({"elim", "adjoint", "both"}));
    sub->add_option("--tower", cfg.tower, "Scalar tower")
        ->check(CLI::IsMember({"exact", "float"}))
        ->each([&](const std::string&) { cfg.tower_given = true; });
    sub->add_option("--tol", cfg.tol, "Float tower zero tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("-o", cfg.output_path, "Write output to a file");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Graph file in qgg v1 format, or - for stdin")->required();
    sub->add_flag("--normalize-gains", cfg.normalize_gains, "Float tower: rescale non-unit gains");
  };

  auto* rank = app.add_subcommand("rank", "Rank of the adjacency matrix");
  auto* gir = app.add_subcommand("girth", "Girth and a shortest cycle");
  auto* cls = app.add_subcommand("classify", "Girth, rank and the matching theorem case");
  auto* red = app.add_subcommand("reduce", "Reduced graph with the removal ledger");
  for (auto* sub : {rank, gir, cls, red}) {
    add_common(sub);
    add_input(sub);
  }
  auto* rnd = app.add_subcommand("random", "Random gains on an underlying edge list");
  add_common(rnd);
  rnd->add_option("input", cfg.input, "Edge list (qgg v1, gains optional), or - for stdin")->required();
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  add_common(ver);
  ver->add_option("--suite", cfg.suite, "Suite to run")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--max-n", cfg.max_n, "Largest graph order")->check(CLI::Range(1, 12));
  ver->add_option("--samples", cfg.samples, "Gain samples per corpus graph");
  for (auto* sub : {rnd, ver}) {
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--gain-set", cfg.gain_set, "Gain distribution")
        ->check(CLI::IsMember({"lipschitz", "uniform"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (cfg.gain_set == "uniform") {
    if (cfg.tower_given && cfg.tower == "exact") {
      err << "qgg: --gain-set uniform needs the float tower\n";
      return kExitUsage;
    }
    cfg.tower = "float";
  }
  if (cfg.normalize_gains && !cfg.floating()) {
    err << "qgg: --normalize-gains applies to the float tower only\n";
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  std::ofstream file;
  if (!cfg.output_path.empty()) {
    file.open(cfg.output_path);
    if (!file) {
      err << "qgg: cannot write '" << cfg.output_path << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = cfg.output_path.empty() ? out : file;

  try {
    if (command == "random") return cmd_random(cfg, sink);
    if (command == "verify") return cmd_verify(cfg, sink);
    return cfg.floating() ? dispatch_graph<double>(command, cfg, sink)
                          : dispatch_graph<Rational>(command, cfg, sink);
  } catch (const RankDisagreement& e) {
    err << "qgg: " << e.what() << "\n";
    return kExitDisagree;
  } catch (const std::exception& e) {
    // Parse and validation errors, disconnected or acyclic input, bad files.
    err << "qgg: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qgg
