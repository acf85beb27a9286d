#include "qgg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "qgg/graph_io.hpp"
#include "qgg/reduce.hpp"
#include "qgg/shapes.hpp"

namespace qgg {

using nlohmann::json;

std::string to_string(Tower t) { return t == Tower::exact ? "exact" : "float"; }
std::string to_string(GainSet g) { return g == GainSet::lipschitz ? "lipschitz" : "uniform"; }

void CheckResult::fail(std::string message, std::optional<std::string> graph) {
  passed = false;
  ++failures;
  if (messages.size() < 10) messages.push_back(message);
  if (graph && witnesses.size() < 20) witnesses.push_back({std::move(message), std::move(*graph)});
}

std::size_t CorpusResult::violations(const std::vector<std::string>& names) const {
  std::size_t n = 0;
  for (const auto& name : names)
    if (auto it = theorems.find(name); it != theorems.end()) n += it->second.violated;
  return n;
}

namespace {

using Clock = std::chrono::steady_clock;

CheckResult named(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Independent stream per (seed, purpose, unit).
Rng make_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t unit = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(unit),
                    static_cast<std::uint32_t>(unit >> 32)};
  return Rng(seq);
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

ExactQuat lip(Rng& rng) { return random_lipschitz_unit<Rational>(rng); }

/// Lipschitz or small-denominator rational unit, evenly.
ExactQuat mixed_unit(Rng& rng) { return uniform(rng, 0, 1) ? lip(rng) : random_rational_unit(rng); }

template <Scalar T>
SwitchingFunction<T> random_switching(std::size_t n, Rng& rng) {
  SwitchingFunction<T> xi;
  for (std::size_t v = 0; v < n; ++v) {
    if constexpr (ScalarTraits<T>::exact)
      xi.xi.push_back(random_rational_unit(rng));
    else
      xi.xi.push_back(random_uniform_unit(rng));
  }
  return xi;
}

std::size_t rank_both(const ExactGraph& g) { return graph_rank(g, RankMethod::both).rank; }

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> write_witnesses(const std::vector<Witness>& ws, const std::string& dir) {
  std::vector<std::string> paths;
  if (ws.empty()) return paths;
  std::filesystem::create_directories(dir);
  for (const auto& w : ws) {
    const auto path = (std::filesystem::path(dir) / ("witness-" + fnv1a_hex(w.graph) + ".qgg")).string();
    std::ofstream out(path);
    out << "# " << w.reason << "\n" << w.graph;
    paths.push_back(path);
  }
  return paths;
}

std::size_t harness_threads(std::size_t requested) {
  std::size_t n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QGG_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min(n, static_cast<std::size_t>(cap));
  }
  return std::max<std::size_t>(n, 1);
}

// ---- corpus -----------------------------------------------------------------------

std::vector<std::uint64_t> connected_masks(std::size_t n) {
  if (n == 0 || n > 8) throw std::invalid_argument("corpus order must be 1..8");
  const std::size_t pairs = n * (n - 1) / 2;
  std::vector<std::pair<std::size_t, std::size_t>> pair_of;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pair_of.emplace_back(u, v);
  std::vector<std::uint64_t> out;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::uint32_t adj[8] = {};
    for (std::size_t b = 0; b < pairs; ++b)
      if (mask >> b & 1) {
        adj[pair_of[b].first] |= 1u << pair_of[b].second;
        adj[pair_of[b].second] |= 1u << pair_of[b].first;
      }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (frontier >> v & 1) next |= adj[v];
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == full) out.push_back(mask);
  }
  return out;
}

SimpleGraph graph_from_mask(std::size_t n, std::uint64_t mask) {
  SimpleGraph g(n);
  std::size_t b = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++b)
      if (mask >> b & 1) g.add_edge(u, v);
  return g;
}

namespace {

constexpr std::size_t kUnitSize = 256;
constexpr std::size_t kWitnessCap = 50;

void tally(CorpusResult& out, const ClassificationReport& rep, const std::string& graph_text) {
  for (const auto& v : rep.verdicts) {
    auto& t = out.theorems[v.theorem];
    ++t.checked;
    ++t.cases[v.label];
    if (!v.agrees) {
      ++t.violated;
      if (out.witnesses.size() < kWitnessCap)
        out.witnesses.push_back({v.theorem + " " + v.label + ": predicted " + v.predicted.describe() +
                                     ", rank " + std::to_string(v.actual),
                                 graph_text});
    }
  }
  if (!rep.notes.empty()) ++out.unmatched_girth4_rank4;
}

template <Scalar T>
Quaternion<T> corpus_gain(GainSet set, Rng& rng) {
  if constexpr (ScalarTraits<T>::exact) {
    return lip(rng);
  } else {
    if (set == GainSet::uniform) return random_uniform_unit(rng);
    return to_float(lip(rng));
  }
}

template <Scalar T>
CorpusResult run_unit(const HarnessConfig& cfg, std::size_t n, const std::vector<std::uint64_t>& masks,
                      std::size_t unit) {
  CorpusResult out;
  Rng rng = make_rng(cfg.seed, 1000 + n, unit);
  const std::size_t end = std::min(masks.size(), (unit + 1) * kUnitSize);
  for (std::size_t m = unit * kUnitSize; m < end; ++m) {
    const SimpleGraph base = graph_from_mask(n, masks[m]);
    ++out.graphs;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      GainGraph<T> g(n);
      for (auto [u, v] : base.edges()) g.add_edge(u, v, corpus_gain<T>(cfg.gain_set, rng));
      ++out.instances;
      try {
        const std::size_t r = graph_rank(g, cfg.method, cfg.tol).rank;
        tally(out, evaluate(g, r), emit_graph(g));
      } catch (const RankDisagreement& e) {
        auto& t = out.theorems["rank oracles"];
        ++t.checked;
        ++t.violated;
        if (out.witnesses.size() < kWitnessCap) out.witnesses.push_back({e.what(), emit_graph(g)});
      } catch (const AmbiguousType&) {
        ++out.ambiguous;
      }
    }
  }
  return out;
}

void merge(CorpusResult& into, CorpusResult&& part) {
  into.graphs += part.graphs;
  into.instances += part.instances;
  into.ambiguous += part.ambiguous;
  into.unmatched_girth4_rank4 += part.unmatched_girth4_rank4;
  for (auto& [name, t] : part.theorems) {
    auto& dst = into.theorems[name];
    dst.checked += t.checked;
    dst.violated += t.violated;
    for (auto& [label, c] : t.cases) dst.cases[label] += c;
  }
  for (auto& w : part.witnesses)
    if (into.witnesses.size() < kWitnessCap) into.witnesses.push_back(std::move(w));
}

template <Scalar T>
CorpusResult run_corpus_in(const HarnessConfig& cfg) {
  const auto t0 = Clock::now();
  const std::size_t max_n = cfg.max_n.value_or(6);
  struct Unit {
    std::size_t n;
    std::size_t index;
  };
  std::vector<std::vector<std::uint64_t>> masks(max_n + 1);
  std::vector<Unit> units;
  for (std::size_t n = 1; n <= max_n; ++n) {
    masks[n] = connected_masks(n);
    for (std::size_t u = 0; u * kUnitSize < masks[n].size(); ++u) units.push_back({n, u});
  }
  std::vector<CorpusResult> parts(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < units.size();)
      parts[i] = run_unit<T>(cfg, units[i].n, masks[units[i].n], units[i].index);
  };
  const std::size_t threads = std::min(harness_threads(cfg.threads), std::max<std::size_t>(units.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  CorpusResult out;
  out.max_n = max_n;
  for (auto& p : parts) merge(out, std::move(p));
  out.seconds = since(t0);
  return out;
}

}  // namespace

CorpusResult run_corpus(const HarnessConfig& cfg) {
  if (cfg.tower == Tower::exact && cfg.gain_set == GainSet::uniform)
    throw std::invalid_argument("uniform gains need the float tower");
  return cfg.tower == Tower::exact ? run_corpus_in<Rational>(cfg) : run_corpus_in<double>(cfg);
}

CheckResult corpus_check(const CorpusResult& corpus, const std::string& name,
                         const std::vector<std::string>& theorems) {
  CheckResult r;
  r.name = name;
  r.seconds = corpus.seconds;
  for (const auto& t : theorems) {
    auto it = corpus.theorems.find(t);
    if (it == corpus.theorems.end()) continue;
    r.checked += it->second.checked;
    r.failures += it->second.violated;
    if (it->second.violated)
      r.messages.push_back(t + ": " + std::to_string(it->second.violated) + " violations");
  }
  if (auto it = corpus.theorems.find("rank oracles"); it != corpus.theorems.end() && it->second.violated) {
    r.failures += it->second.violated;
    r.messages.push_back("rank oracles disagree on " + std::to_string(it->second.violated) + " instances");
  }
  r.passed = r.failures == 0;
  for (const auto& w : corpus.witnesses)
    for (const auto& t : theorems)
      if (w.reason.rfind(t + " ", 0) == 0 && r.witnesses.size() < 20) r.witnesses.push_back(w);
  return r;
}

// ---- constructed families -----------------------------------------------------------

CheckResult check_oracle_equivalence(std::uint64_t seed, std::size_t count, std::size_t max_size) {
  const auto t0 = Clock::now();
  CheckResult r = named("oracle equivalence");
  Rng rng = make_rng(seed, 1);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t m = uniform(rng, 1, max_size), n = uniform(rng, 1, max_size);
    QMatrix<Rational> a(m, n);
    if (i % 2 == 0) {
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (uniform(rng, 0, 1)) a(x, y) = lip(rng);
    } else {
      // Product of m x k and k x n factors: rank at most k.
      const std::size_t k = uniform(rng, 0, std::min(m, n));
      QMatrix<Rational> b(m, k), c(k, n);
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < k; ++y) b(x, y) = lip(rng);
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < n; ++y) c(x, y) = lip(rng);
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < k; ++z) a(x, y) += b(x, z) * c(z, y);
    }
    ++r.checked;
    const std::size_t e = left_row_rank_eliminate(a).rank;
    const std::size_t v = rank_via_adjoint(a).rank;
    if (e != v)
      r.fail("matrix " + std::to_string(i) + " (" + std::to_string(m) + "x" + std::to_string(n) +
             "): elimination " + std::to_string(e) + ", adjoint " + std::to_string(v));
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_path_cycle_formulas(std::uint64_t seed, std::size_t max_n) {
  const auto t0 = Clock::now();
  CheckResult r = named("path and cycle formulas");
  Rng rng = make_rng(seed, 2);
  for (std::size_t n = 1; n <= max_n; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<ExactQuat> gains;
      for (std::size_t e = 0; e + 1 < n; ++e) gains.push_back(mixed_unit(rng));
      const auto g = path_graph<Rational>(gains);
      ++r.checked;
      const std::size_t got = rank_both(g);
      if (got != path_rank(n))
        r.fail("P" + std::to_string(n) + ": rank " + std::to_string(got) + ", expected " +
                   std::to_string(path_rank(n)),
               emit_graph(g));
    }
  for (std::size_t n = 3; n <= max_n; ++n)
    for (CycleType t : {CycleType::Type1, CycleType::Type2, CycleType::Type3, CycleType::Type4}) {
      if (!type_matches_parity(n, t)) continue;
      for (int trial = 0; trial < 3; ++trial) {
        // Spread the gain around the cycle by a random switching.
        const auto g = apply_switching(typed_cycle(n, t), random_switching<Rational>(n, rng));
        std::vector<Vertex> cyc(n);
        for (Vertex v = 0; v < n; ++v) cyc[v] = v;
        ++r.checked;
        const std::size_t got = rank_both(g);
        const CycleType seen = decide_cycle_type(g, cyc);
        if (seen != t || got != cycle_rank(n, t))
          r.fail("C" + std::to_string(n) + " " + to_string(t) + ": rank " + std::to_string(got) + ", type " +
                     to_string(seen),
                 emit_graph(g));
      }
    }
  r.seconds = since(t0);
  return r;
}

CheckResult check_cycle_attachment(std::uint64_t seed) {
  const auto t0 = Clock::now();
  CheckResult r = named("cycle attachment");
  Rng rng = make_rng(seed, 3);
  for (std::size_t n = 3; n <= 8; ++n)
    for (CycleType t : {CycleType::Type1, CycleType::Type2, CycleType::Type3, CycleType::Type4}) {
      if (!type_matches_parity(n, t)) continue;
      for (int trial = 0; trial < 6; ++trial) {
        // G1: random connected graph on m vertices; the cycle is glued at 0.
        const std::size_t m = uniform(rng, 1, 5);
        ExactGraph g1(m);
        for (Vertex v = 1; v < m; ++v) g1.add_edge(uniform(rng, 0, v - 1), v, mixed_unit(rng));
        for (Vertex u = 0; u < m; ++u)
          for (Vertex v = u + 1; v < m; ++v)
            if (!g1.has_edge(u, v) && uniform(rng, 0, 3) == 0) g1.add_edge(u, v, mixed_unit(rng));
        ExactGraph g(m + n - 1);
        for (const auto& e : g1.edges()) g.add_edge(e.u, e.v, e.gain);
        std::vector<Vertex> cyc{0};
        for (Vertex v = m; v < m + n - 1; ++v) cyc.push_back(v);
        for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(cyc[i], cyc[i + 1], ExactQuat::one());
        g.add_edge(cyc.back(), 0, type_target_gain(n, t));
        const auto h = apply_switching(g, random_switching<Rational>(g.order(), rng));
        const std::size_t r1 = rank_both(g1);
        const std::size_t r2 = rank_both(delete_vertices(g1, {0}).graph);
        const auto p = cycle_attachment_rank(n, t, r1, r2);
        const std::size_t got = rank_both(h);
        ++r.checked;
        if (!p.admits(got))
          r.fail("C" + std::to_string(n) + " " + to_string(t) + " attached: rank " + std::to_string(got) +
                     ", predicted " + p.describe(),
                 emit_graph(h));
      }
    }
  r.seconds = since(t0);
  return r;
}

CheckResult check_worked_examples() {
  const auto t0 = Clock::now();
  CheckResult r = named("worked examples");
  auto expect = [&](bool ok, const std::string& what) {
    ++r.checked;
    if (!ok) r.fail(what);
  };
  {
    const auto g = figure2_graph();
    expect(girth(g).girth == 4u, "Fig. 2 girth 4");
    expect(rank_both(g) == 2, "Fig. 2 rank 2");
    for (std::vector<Vertex> c : {std::vector<Vertex>{0, 3, 1, 4}, {0, 3, 2, 4}, {1, 3, 2, 4}})
      expect(cycle_gain(g, c) == ExactQuat::one(), "Fig. 2 4-cycle gain 1");
    expect(classify(g).matched_case == "Thm 3.2(b)", "Fig. 2 case Thm 3.2(b)");
  }
  {
    const auto g = figure6_graph();
    const auto pairs = find_multiple_vertices(g);
    expect(!pairs.empty() && pairs.front().x == 0 && pairs.front().y == 2 && pairs.front().k == -ExactQuat::k(),
           "Fig. 6 multiple pair (v1, v3) with k = -k");
    const auto red = reduced_graph(g);
    const auto& h = red.graph.graph;
    expect(h.order() == 3 && h.size() == 3 && red.graph.origin == std::vector<Vertex>{0, 1, 3},
           "Fig. 6 reduced graph is the triangle v1 v2 v4");
    expect(h.order() == 3 && decide_cycle_type(h, {0, 1, 2}) == CycleType::Type4, "Fig. 6 triangle Type 4");
    expect(rank_both(g) == 2 && rank_both(h) == 2, "Fig. 6 rank 2");
    expect(classify(g).matched_case == "Thm 5.1(b)", "Fig. 6 case Thm 5.1(b)");
  }
  {
    const auto g = figure9_graph();
    expect(decide_cycle_type(g, {0, 1, 4, 3}) == CycleType::Type2, "Fig. 9 v1v2v5v4 Type 2");
    expect(cycle_gain(g, {0, 1, 4, 3}) == ExactQuat::j(), "Fig. 9 v1v2v5v4 gain j");
    expect(decide_cycle_type(g, {0, 1, 2, 3}) == CycleType::Type1, "Fig. 9 v1v2v3v4 Type 1");
    expect(rank_both(g) == 4, "Fig. 9 rank 4");
    expect(recognize(g).family == Family::Theta, "Fig. 9 is theta(1,1,1)");
  }
  r.seconds = since(t0);
  return r;
}

namespace {

struct TableRow {
  std::string graph;
  std::size_t rank;
  std::vector<std::vector<ExactQuat>> conforming;
  std::vector<std::vector<ExactQuat>> nonconforming;
};

std::vector<ExactQuat> typed(const Template& t, std::initializer_list<CycleType> types) {
  std::vector<ExactQuat> out;
  std::size_t i = 0;
  for (CycleType c : types) out.push_back(type_target_gain(t.cycles[i++].size(), c));
  return out;
}

std::vector<TableRow> table_rows(Rng& rng) {
  using CT = CycleType;
  auto T = [](const char* name) -> const Template& { return template_by_name(name); };
  const ExactQuat one = ExactQuat::one(), i = ExactQuat::i(), j = ExactQuat::j();
  const Rational h(1, 2);
  const ExactQuat a8(h, h, h, h);
  std::vector<TableRow> rows = {
      {"G5", 2, {typed(T("G5"), {CT::Type4, CT::Type1})}, {typed(T("G5"), {CT::Type3, CT::Type1})}},
      {"G9", 2, {typed(T("G9"), {CT::Type1, CT::Type1})}, {typed(T("G9"), {CT::Type1, CT::Type2})}},
      {"G5", 3, {typed(T("G5"), {CT::Type3, CT::Type1})}, {typed(T("G5"), {CT::Type4, CT::Type1})}},
      {"G1", 4, {{i, j}, {i, -i}}, {{one, one}, {i, one}}},
      {"G2", 4, {typed(T("G2"), {CT::Type4, CT::Type1})}, {typed(T("G2"), {CT::Type3, CT::Type1})}},
      {"G3", 4, {typed(T("G3"), {CT::Type1, CT::Type1})}, {typed(T("G3"), {CT::Type2, CT::Type1})}},
      {"G5",
       4,
       {typed(T("G5"), {CT::Type3, CT::Type2}), typed(T("G5"), {CT::Type4, CT::Type2})},
       {typed(T("G5"), {CT::Type3, CT::Type1})}},
      {"G6", 4, {{i, j}, {one, one}}, {{one, i}}},
      {"G7", 4, {typed(T("G7"), {CT::Type4, CT::Type1})}, {typed(T("G7"), {CT::Type3, CT::Type1})}},
      {"G8", 4, {{a8, a8 - one}}, {{one, one}}},
      {"G9",
       4,
       {typed(T("G9"), {CT::Type2, CT::Type1}), typed(T("G9"), {CT::Type1, CT::Type2}),
        typed(T("G9"), {CT::Type2, CT::Type2})},
       {typed(T("G9"), {CT::Type1, CT::Type1})}},
      {"G10", 4, {typed(T("G10"), {CT::Type1, CT::Type4})}, {typed(T("G10"), {CT::Type1, CT::Type3})}},
      {"G11", 4, {typed(T("G11"), {CT::Type1, CT::Type1})}, {typed(T("G11"), {CT::Type2, CT::Type1})}},
      {"G12", 4, {typed(T("G12"), {CT::Type4, CT::Type3})}, {typed(T("G12"), {CT::Type3, CT::Type3})}},
      {"G15", 4, {typed(T("G15"), {CT::Type4, CT::Type1})}, {typed(T("G15"), {CT::Type3, CT::Type1})}},
      {"G16", 4, {typed(T("G16"), {CT::Type4, CT::Type1})}, {typed(T("G16"), {CT::Type4, CT::Type2})}},
      {"G17", 4, {typed(T("G17"), {CT::Type1, CT::Type3})}, {typed(T("G17"), {CT::Type2, CT::Type3})}},
      {"G18", 4, {typed(T("G18"), {CT::Type2, CT::Type1})}, {typed(T("G18"), {CT::Type2, CT::Type2})}},
      {"G21", 4, {typed(T("G21"), {CT::Type1, CT::Type1})}, {typed(T("G21"), {CT::Type1, CT::Type2})}},
      {"G22", 4, {typed(T("G22"), {CT::Type1, CT::Type1})}, {typed(T("G22"), {CT::Type2, CT::Type1})}},
  };
  // Rows whose condition is "any gain" have no nonconforming assignment.
  for (const char* name : {"G13", "G14", "G19", "G20"}) {
    TableRow row{name, 4, {}, {}};
    for (int s = 0; s < 5; ++s) row.conforming.push_back({lip(rng), lip(rng)});
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

CheckResult check_tables(std::uint64_t seed) {
  const auto t0 = Clock::now();
  CheckResult r = named("tables");
  Rng rng = make_rng(seed, 4);
  for (const auto& row : table_rows(rng)) {
    const Template& t = template_by_name(row.graph);
    const bool first_table = row.graph.size() == 2 || row.graph == "G10" || row.graph == "G11";
    auto predict = [&](const ExactGraph& g) {
      return first_table ? table1_predict(g).rank : table2_predict(g).rank;
    };
    const std::string tag = row.graph + " rank " + std::to_string(row.rank);
    for (const auto& gains : row.conforming) {
      const auto g = apply_switching(realize<Rational>(t, gains), random_switching<Rational>(t.graph.order(), rng));
      const std::size_t got = rank_both(g);
      ++r.checked;
      if (got != row.rank || !(predict(g) == Prediction::exact(row.rank)))
        r.fail(tag + ": conforming gains gave rank " + std::to_string(got) + ", predicted " + predict(g).describe(),
               emit_graph(g));
    }
    for (const auto& gains : row.nonconforming) {
      const auto g = apply_switching(realize<Rational>(t, gains), random_switching<Rational>(t.graph.order(), rng));
      const std::size_t got = rank_both(g);
      ++r.checked;
      if (got == row.rank || !predict(g).admits(got))
        r.fail(tag + ": nonconforming gains gave rank " + std::to_string(got) + ", predicted " + predict(g).describe(),
               emit_graph(g));
    }
    if (row.nonconforming.empty()) r.messages.push_back(tag + ": any gain conforms, no nonconforming case");
  }
  struct Special {
    Template t;
    std::size_t rank;
  };
  for (const auto& s : {Special{theta_133(), 6}, Special{theta_333(), 8}, Special{g0_template(), 6}}) {
    std::vector<CycleType> all1(s.t.cycles.size(), CycleType::Type1);
    const auto g = apply_switching(realize_types(s.t, all1), random_switching<Rational>(s.t.graph.order(), rng));
    const std::size_t got = rank_both(g);
    ++r.checked;
    if (got != s.rank || !rank_eq_girth_case(g))
      r.fail(s.t.name + ": all cycles Type 1 gave rank " + std::to_string(got), emit_graph(g));
    auto broken = all1;
    broken.front() = CycleType::Type2;
    const auto h = realize_types(s.t, broken);
    ++r.checked;
    if (rank_both(h) == s.rank) r.fail(s.t.name + ": a Type 2 cycle kept rank " + std::to_string(s.rank), emit_graph(h));
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_reductions(std::uint64_t seed, std::size_t graphs, std::size_t max_n, std::size_t switchings) {
  const auto t0 = Clock::now();
  CheckResult r = named("reductions");
  Rng rng = make_rng(seed, 5);
  for (std::size_t i = 0; i < graphs; ++i) {
    std::size_t n = uniform(rng, 2, max_n);
    const std::size_t density = uniform(rng, 1, 3);
    ExactGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (uniform(rng, 0, 5) < density) g.add_edge(u, v, mixed_unit(rng));
    // Plant multiple vertices: a copy y of x with phi(x z) = k phi(y z).
    for (std::size_t copies = uniform(rng, 0, 2); copies > 0 && g.order() < max_n; --copies) {
      const Vertex x = uniform(rng, 0, g.order() - 1);
      if (g.neighbors(x).empty()) continue;
      ExactGraph h(g.order() + 1);
      for (const auto& e : g.edges()) h.add_edge(e.u, e.v, e.gain);
      const ExactQuat k = lip(rng);
      for (Vertex z : g.neighbors(x)) h.add_edge(g.order(), z, inverse(k) * g.gain(x, z));
      g = std::move(h);
    }
    n = g.order();
    const std::string text = emit_graph(g);
    const std::size_t rank = rank_both(g);

    const auto trim = trim_pendant_pairs(g);
    ++r.checked;
    if (rank_both(trim.graph.graph) + 2 * trim.pairs != rank || trim.ledger.size() != trim.pairs)
      r.fail("pendant pair ledger identity", text);

    ++r.checked;
    if (rank_both(remove_pendant_twins(g).graph) != rank) r.fail("pendant twin removal changed the rank", text);

    const auto red = reduced_graph(g);
    ++r.checked;
    if (rank_both(red.graph.graph) != rank || !find_multiple_vertices(red.graph.graph).empty())
      r.fail("reduced graph rank or fixpoint", text);
    const auto other = reduced_graph_with(g, [&](const auto& pairs) {
      return std::pair<std::size_t, int>{uniform(rng, 0, pairs.size() - 1), static_cast<int>(uniform(rng, 0, 1))};
    });
    ++r.checked;
    if (other.graph.graph.order() != red.graph.graph.order() || rank_both(other.graph.graph) != rank)
      r.fail("reduction order changed the reduced graph's order or rank", text);

    for (std::size_t s = 0; s < switchings; ++s) {
      const auto h = apply_switching(g, random_switching<Rational>(n, rng));
      ++r.checked;
      if (graph_rank(h).rank != rank) r.fail("switching changed the rank", text);
    }
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_k4_sampling(std::uint64_t seed, std::size_t exact, std::size_t floating) {
  const auto t0 = Clock::now();
  CheckResult r = named("K4 sampling");
  Rng rng = make_rng(seed, 6);
  for (std::size_t s = 0; s < exact; ++s) {
    std::vector<ExactQuat> gains;
    for (int e = 0; e < 6; ++e) gains.push_back(lip(rng));
    const auto g = k4_graph<Rational>(gains);
    ++r.checked;
    const std::size_t got = rank_both(g);
    if (got != 4) r.fail("Lipschitz K4 of rank " + std::to_string(got), emit_graph(g));
  }
  for (std::size_t s = 0; s < floating; ++s) {
    std::vector<FloatQuat> gains;
    for (int e = 0; e < 6; ++e) gains.push_back(random_uniform_unit(rng));
    const auto g = k4_graph<double>(gains);
    ++r.checked;
    const std::size_t got = graph_rank(g, RankMethod::elimination, kDefaultTolerance).rank;
    if (got != 4) r.fail("uniform K4 of rank " + std::to_string(got), emit_graph(g));
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_canonical_unicyclic(std::uint64_t seed, std::size_t count) {
  const auto t0 = Clock::now();
  CheckResult r = named("canonical unicyclic");
  Rng rng = make_rng(seed, 7);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t g = 3 + i % 6;
    std::vector<std::size_t> stars(g, 0);
    // Vary the number of starred vertices from one to all of them.
    const std::size_t t = 1 + (i / 6) % g;
    std::vector<std::size_t> order(g);
    for (std::size_t v = 0; v < g; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t s = 0; s < t; ++s) stars[order[s]] = uniform(rng, 1, 3);
    // k counted from the construction: gaps between consecutive starred
    // vertices, segment order gap - 1, zero counted as even.
    std::vector<std::size_t> pos;
    for (std::size_t v = 0; v < g; ++v)
      if (stars[v]) pos.push_back(v);
    std::size_t k = 0;
    for (std::size_t s = 0; s < pos.size(); ++s) {
      const std::size_t gap = pos.size() == 1 ? g : (pos[(s + 1) % pos.size()] + g - pos[s]) % g;
      if ((gap - 1) % 2 == 0) ++k;
    }
    std::vector<ExactQuat> gains;
    for (std::size_t e = 0; e < g; ++e) gains.push_back(mixed_unit(rng));
    const auto base = canonical_unicyclic<Rational>(stars, gains);
    const auto h = apply_switching(base, random_switching<Rational>(base.order(), rng));
    const auto shape = recognize(h).as(Family::CanonicalUnicyclic);
    const std::size_t got = rank_both(h);
    ++r.checked;
    if (!shape || shape->params != std::vector<std::size_t>{g, t, k} || got != g + k || (g - k) % 2 != 0)
      r.fail("g=" + std::to_string(g) + " t=" + std::to_string(t) + " k=" + std::to_string(k) + ": rank " +
                 std::to_string(got),
             emit_graph(h));
  }
  r.seconds = since(t0);
  return r;
}

// ---- suites ----------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"formulas", "girth-bound", "tables", "classifications",
                                                 "reductions", "all"};
  return names;
}

namespace {

std::vector<std::string> all_theorems(const CorpusResult& c) {
  std::vector<std::string> out;
  for (const auto& [name, t] : c.theorems)
    if (name != "rank oracles") out.push_back(name);
  return out;
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const HarnessConfig& cfg) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  const bool all = suite == "all";
  std::vector<CheckResult> checks;
  std::optional<CorpusResult> corpus;
  if (all || suite == "formulas") {
    checks.push_back(check_oracle_equivalence(cfg.seed));
    checks.push_back(check_path_cycle_formulas(cfg.seed, all ? 12 : cfg.max_n.value_or(12)));
    checks.push_back(check_cycle_attachment(cfg.seed));
    checks.push_back(check_canonical_unicyclic(cfg.seed));
    checks.push_back(check_k4_sampling(cfg.seed));
  }
  if (all || suite == "tables") {
    checks.push_back(check_worked_examples());
    checks.push_back(check_tables(cfg.seed));
  }
  if (all || suite == "reductions")
    checks.push_back(check_reductions(cfg.seed, 100, all ? 10 : cfg.max_n.value_or(10)));
  if (all || suite == "girth-bound" || suite == "classifications") {
    HarnessConfig c = cfg;
    if (all) c.max_n = cfg.max_n.value_or(6);
    corpus = run_corpus(c);
    if (all || suite == "girth-bound") checks.push_back(corpus_check(*corpus, "girth bound", {"Thm 3.2"}));
    if (all || suite == "classifications") {
      checks.push_back(corpus_check(*corpus, "rank classifications", kClassificationTheorems));
      checks.push_back(corpus_check(*corpus, "every corpus prediction", all_theorems(*corpus)));
    }
  }
  SuiteReport rep;
  rep.json["suite"] = suite;
  rep.json["config"] = {{"max_n", cfg.max_n ? json(*cfg.max_n) : json(nullptr)},
                        {"samples", cfg.samples},
                        {"seed", cfg.seed},
                        {"method", to_string(cfg.method)},
                        {"tower", to_string(cfg.tower)},
                        {"gain_set", to_string(cfg.gain_set)},
                        {"tol", cfg.tol}};
  rep.json["checks"] = json::array();
  for (auto& c : checks) {
    if (!cfg.witness_dir.empty()) c.witness_files = write_witnesses(c.witnesses, cfg.witness_dir);
    rep.passed = rep.passed && c.passed;
    rep.json["checks"].push_back(to_json(c));
  }
  if (corpus) rep.json["corpus"] = to_json(*corpus);
  rep.json["passed"] = rep.passed;
  return rep;
}

// ---- JSON ------------------------------------------------------------------------

nlohmann::json to_json(const CheckResult& r) {
  return {{"name", r.name},         {"passed", r.passed},     {"checked", r.checked},
          {"failures", r.failures}, {"messages", r.messages}, {"witness_files", r.witness_files}};
}

nlohmann::json to_json(const CorpusResult& r) {
  json theorems = json::object();
  for (const auto& [name, t] : r.theorems)
    theorems[name] = {{"checked", t.checked}, {"violated", t.violated}, {"cases", t.cases}};
  return {{"max_n", r.max_n},
          {"graphs", r.graphs},
          {"instances", r.instances},
          {"ambiguous", r.ambiguous},
          {"unmatched_girth4_rank4", r.unmatched_girth4_rank4},
          {"theorems", theorems}};
}

nlohmann::json to_json(const Shape& s) {
  json witness = json::array();
  for (const auto& part : s.witness) {
    json p = json::array();
    for (Vertex v : part) p.push_back(v + 1);
    witness.push_back(p);
  }
  return {{"family", to_string(s.family)}, {"params", s.params}, {"witness", witness}};
}

nlohmann::json to_json(const ClassificationReport& r) {
  json shape = to_json(static_cast<const Shape&>(r.shape));
  json alts = json::array();
  for (const auto& a : r.shape.alternatives) alts.push_back(to_json(a));
  shape["alternatives"] = alts;
  json cycle = json::array();
  for (Vertex v : r.shortest_cycle) cycle.push_back(v + 1);
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"theorem", v.theorem},
                        {"case", v.label},
                        {"predicted", v.predicted.describe()},
                        {"rank", v.actual},
                        {"agrees", v.agrees}});
  return {{"g", r.girth ? json(*r.girth) : json(nullptr)},
          {"rank", r.rank},
          {"relation", r.relation},
          {"case", r.matched_case},
          {"prediction_agrees", r.prediction_agrees},
          {"shape", shape},
          {"shortest_cycle", cycle},
          {"shortest_cycle_type", r.shortest_cycle_type ? json(to_string(*r.shortest_cycle_type)) : json(nullptr)},
          {"verdicts", verdicts},
          {"notes", r.notes}};
}

}  // namespace qgg
