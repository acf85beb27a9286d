#pragma once

// Closed-form ranks, case matchers for the rank/girth classifications, and an
// evaluator that checks every applicable prediction against a computed rank.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgg/graph.hpp"
#include "qgg/reduce.hpp"

namespace qgg {

class WrongFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PendantTwinsPresent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// What a statement says about a rank.
struct Prediction {
  enum class Kind { Exact, AtLeast, Interval, NotEqual };
  Kind kind = Kind::Exact;
  std::size_t lo = 0;
  std::size_t hi = 0;

  static Prediction exact(std::size_t v) { return {Kind::Exact, v, v}; }
  static Prediction at_least(std::size_t v) { return {Kind::AtLeast, v, v}; }
  static Prediction interval(std::size_t lo, std::size_t hi) { return {Kind::Interval, lo, hi}; }
  static Prediction not_equal(std::size_t v) { return {Kind::NotEqual, v, v}; }

  bool admits(std::size_t rank) const;
  /// "4", ">=5" (printed ">4"), "[4,7]", "!=4".
  std::string describe() const;
  friend bool operator==(const Prediction&, const Prediction&) = default;
};

// ---- closed forms ---------------------------------------------------------------

/// n-1 for odd n, n for even n. Throws std::invalid_argument for n = 0.
std::size_t path_rank(std::size_t n);

/// n-2, n, n, n-1 for Types 1..4. Throws ParityMismatch.
std::size_t cycle_rank(std::size_t n, CycleType type);

/// Rank of an n-cycle glued at one vertex to a graph G1 at u, given
/// r(G1) and r(G1 - u). Type 3 only pins the rank to an interval.
Prediction cycle_attachment_rank(std::size_t n, CycleType type, std::size_t r_g1, std::size_t r_g2);

// ---- structural predicates ------------------------------------------------------

/// True iff every 4-cycle across the bipartition is Type 1. Throws WrongFamily
/// unless the graph is K_{a,b} with a, b >= 2.
template <Scalar T>
bool kab_rank2_iff(const GainGraph<T>& g);

/// A cycle with one of its vertices joined by an edge to the center of a star
/// with q >= 1 leaves.
struct JoinedStar {
  std::vector<Vertex> cycle;  // starts at the joined cycle vertex
  Vertex center;
  std::vector<Vertex> leaves;
};
std::optional<JoinedStar> match_joined_star(const SimpleGraph& g);

/// Table templates whose underlying graph is isomorphic to g.
struct TemplateMatch {
  std::string name;
  std::vector<Vertex> map;  // template vertex -> g vertex
};
std::optional<TemplateMatch> match_table1(const SimpleGraph& g);
std::optional<TemplateMatch> match_table2(const SimpleGraph& g);

// ---- predictions ----------------------------------------------------------------

struct TablePrediction {
  std::string graph;  // "G1".."G22", or "" when the shape is not tabulated
  Prediction rank;
};

/// Bicyclic graphs without pendant vertices. Shapes outside the tabulated
/// ones predict ">4". Throws WrongFamily.
template <Scalar T>
TablePrediction table1_predict(const GainGraph<T>& g);

/// Bicyclic graphs with pendant vertices and no pendant twins: 4 when a
/// tabulated shape meets its gain condition, otherwise "!=4". Throws
/// WrongFamily or PendantTwinsPresent.
template <Scalar T>
TablePrediction table2_predict(const GainGraph<T>& g);

/// Lower bound for a bicyclic graph with pendant vertices. For theta(p,l,q)
/// the parity test uses the smallest part p. Throws WrongFamily.
std::size_t bicyclic_lower_bound(const SimpleGraph& g);

/// g + k. Throws WrongFamily unless recognized as canonical unicyclic.
std::size_t canonical_unicyclic_rank(const SimpleGraph& g);

/// Case label ("Thm 3.2(a)" ...) matched from structure and gains alone.
template <Scalar T>
std::optional<std::string> girth_bound_case(const GainGraph<T>& g);
template <Scalar T>
std::optional<std::string> classify_rank2(const GainGraph<T>& g);
template <Scalar T>
std::optional<std::string> rank_g_minus_1_case(const GainGraph<T>& g);
/// Girth 3, 4 or >= 5 cases for r = g. Girth 4 cases are sufficient only.
template <Scalar T>
std::optional<std::string> rank_eq_girth_case(const GainGraph<T>& g);

struct GirthFamilyMatch {
  std::optional<std::string> label;
  bool sufficient_only = false;  // girth 4
};

/// Computes the rank and dispatches on rank - girth. Throws AcyclicGraph.
template <Scalar T>
GirthFamilyMatch classify_rank_eq_girth_family(const GainGraph<T>& g,
                                               RankMethod method = RankMethod::elimination,
                                               double tol = kDefaultTolerance);

/// Computed rank equals 4. Throws WrongFamily unless the graph is K4.
template <Scalar T>
bool k4_rank_check(const GainGraph<T>& g, double tol = kDefaultTolerance);

// ---- evaluation -----------------------------------------------------------------

struct Verdict {
  std::string theorem;  // "Thm 4.10", "Table 1", "Lemma 4.6" ...
  std::string label;    // matched case or "none"
  Prediction predicted;
  std::size_t actual = 0;
  bool agrees = true;
};

struct ClassificationReport {
  std::optional<std::size_t> girth;
  std::size_t rank = 0;
  std::string relation;  // "g-2", "g-1", "g", ">g", "<g-2", "acyclic"
  std::string matched_case = "unclassified";
  bool prediction_agrees = true;
  ShapeReport shape;
  std::vector<Vertex> shortest_cycle;
  std::optional<CycleType> shortest_cycle_type;
  std::vector<Verdict> verdicts;
  /// Observations that are data rather than failures, e.g. girth 4 rank 4
  /// graphs outside the sufficient cases.
  std::vector<std::string> notes;
};

std::string relation_of(std::optional<std::size_t> girth, std::size_t rank);

/// Every applicable statement checked against `rank`. Throws
/// DisconnectedGraph.
template <Scalar T>
ClassificationReport evaluate(const GainGraph<T>& g, std::size_t rank);

/// evaluate with the rank computed by `method`.
template <Scalar T>
ClassificationReport classify(const GainGraph<T>& g, RankMethod method = RankMethod::elimination,
                              double tol = kDefaultTolerance);

/// Thm 3.2 alone: throws AcyclicGraph; a bound violation is reported in the
/// verdicts, not thrown.
template <Scalar T>
ClassificationReport verify_girth_bound(const GainGraph<T>& g,
                                        RankMethod method = RankMethod::elimination,
                                        double tol = kDefaultTolerance);

}  // namespace qgg
