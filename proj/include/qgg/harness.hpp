#pragma once

// Verification suites: constructed families, the exhaustive small-graph
// corpus, and the JSON report they produce.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgg/theorems.hpp"

namespace qgg {

enum class Tower { exact, floating };
enum class GainSet { lipschitz, uniform };

std::string to_string(Tower t);
std::string to_string(GainSet g);

struct HarnessConfig {
  std::optional<std::size_t> max_n;  // suite default when unset
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  RankMethod method = RankMethod::elimination;
  Tower tower = Tower::exact;
  GainSet gain_set = GainSet::lipschitz;
  double tol = kDefaultTolerance;
  std::size_t threads = 0;  // 0: QGG_THREADS, else hardware concurrency
  std::string witness_dir;  // empty: witnesses are kept in memory only
};

/// A graph that contradicted a prediction, in qgg v1 text.
struct Witness {
  std::string reason;
  std::string graph;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t failures = 0;
  double seconds = 0;
  std::vector<std::string> messages;  // first few failures
  std::vector<Witness> witnesses;
  std::vector<std::string> witness_files;

  void fail(std::string message, std::optional<std::string> graph = std::nullopt);
};

struct TheoremTally {
  std::size_t checked = 0;
  std::size_t violated = 0;
  std::map<std::string, std::size_t> cases;  // matched label -> count
};

struct CorpusResult {
  std::size_t max_n = 0;
  std::size_t graphs = 0;     // connected labeled underlying graphs
  std::size_t instances = 0;  // graphs x samples
  std::size_t ambiguous = 0;  // float type decisions inside the refusal band
  std::size_t unmatched_girth4_rank4 = 0;
  std::map<std::string, TheoremTally> theorems;
  std::vector<Witness> witnesses;  // capped
  double seconds = 0;

  std::size_t violations(const std::vector<std::string>& theorems) const;
};

/// Threads to use: QGG_THREADS when set and positive, capped by `requested`
/// when that is nonzero.
std::size_t harness_threads(std::size_t requested);

/// Connected labeled graphs on n vertices, by adjacency bitmask over the
/// pairs (0,1), (0,2), ..., (n-2,n-1).
std::vector<std::uint64_t> connected_masks(std::size_t n);
SimpleGraph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Every connected labeled graph on 1..max_n vertices with `samples` random
/// gain assignments each, every applicable prediction checked. Work units
/// are seeded from (seed, n, unit) so results do not depend on threads.
CorpusResult run_corpus(const HarnessConfig& cfg);

CheckResult check_oracle_equivalence(std::uint64_t seed, std::size_t count = 200, std::size_t max_size = 10);
CheckResult check_path_cycle_formulas(std::uint64_t seed, std::size_t max_n = 12);
CheckResult check_cycle_attachment(std::uint64_t seed);
CheckResult check_worked_examples();
CheckResult check_tables(std::uint64_t seed);
CheckResult check_reductions(std::uint64_t seed, std::size_t graphs = 100, std::size_t max_n = 10,
                             std::size_t switchings = 50);
CheckResult check_k4_sampling(std::uint64_t seed, std::size_t exact = 500, std::size_t floating = 500);
CheckResult check_canonical_unicyclic(std::uint64_t seed, std::size_t count = 50);

/// Corpus verdict for a set of statements.
CheckResult corpus_check(const CorpusResult& corpus, const std::string& name,
                         const std::vector<std::string>& theorems);

inline const std::vector<std::string> kClassificationTheorems = {"Thm 4.10", "Thm 5.1", "Thm 4.9", "Thm 5.11"};

struct SuiteReport {
  nlohmann::json json;
  bool passed = true;
};

/// formulas, girth-bound, tables, classifications, reductions, all. Throws
/// std::invalid_argument on an unknown suite.
SuiteReport run_suite(const std::string& suite, const HarnessConfig& cfg);

const std::vector<std::string>& suite_names();

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

/// Writes each witness as witness-<hash>.qgg under dir; returns the paths.
std::vector<std::string> write_witnesses(const std::vector<Witness>& ws, const std::string& dir);

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const CorpusResult& r);
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const Shape& s);

}  // namespace qgg
