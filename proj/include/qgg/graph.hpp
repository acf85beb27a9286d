#pragma once

// Gain graphs over unit quaternions: storage, cycles and their types,
// switching, and subgraph utilities.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgg/qlinalg.hpp"
#include "qgg/quat.hpp"

namespace qgg {

using Vertex = std::size_t;

class VertexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Loops, parallel edges, non-unit gains.
class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotACycle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisconnectedGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AcyclicGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Float-tower cycle type inside the refusal band (1e-9, 1e-6).
class AmbiguousType : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Underlying simple graph; neighbor lists kept sorted.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n) {}

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edges_; }

  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// (u, v) with u < v, lexicographic.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.adj_ == b.adj_; }

 private:
  void check(Vertex v) const;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

template <Scalar T>
struct Edge {
  Vertex u;
  Vertex v;
  Quaternion<T> gain;  // for the orientation u -> v
};

/// Simple graph with a unit gain on each oriented edge; the reverse
/// orientation always reads back the conjugate.
template <Scalar T>
class GainGraph {
 public:
  using Q = Quaternion<T>;

  GainGraph() = default;
  explicit GainGraph(std::size_t n) : base_(n), arcs_(n) {}

  std::size_t order() const { return base_.order(); }
  std::size_t size() const { return base_.size(); }

  /// Throws InvalidGraph on loops, duplicates, or non-unit gain.
  void add_edge(Vertex u, Vertex v, const Q& gain);

  /// Like add_edge but skips the unit check; internal use by switching and
  /// reductions, whose outputs are unit whenever the inputs are.
  void add_edge_unchecked(Vertex u, Vertex v, const Q& gain);

  bool has_edge(Vertex u, Vertex v) const { return base_.has_edge(u, v); }

  /// phi(u -> v). Throws InvalidGraph if uv is not an edge.
  const Q& gain(Vertex u, Vertex v) const;

  const std::vector<Vertex>& neighbors(Vertex v) const { return base_.neighbors(v); }
  std::size_t degree(Vertex v) const { return base_.degree(v); }
  const SimpleGraph& underlying() const { return base_; }

  /// Edges stored as min -> max with the matching gain.
  std::vector<Edge<T>> edges() const;

  friend bool operator==(const GainGraph& a, const GainGraph& b) {
    return a.base_ == b.base_ && a.edges() == b.edges();
  }

 private:
  struct Arc {
    Vertex to;
    Q gain;
  };
  void insert_arc(Vertex from, Vertex to, const Q& gain);

  SimpleGraph base_;
  std::vector<std::vector<Arc>> arcs_;
};

template <Scalar T>
bool operator==(const Edge<T>& a, const Edge<T>& b) {
  return a.u == b.u && a.v == b.v && a.gain == b.gain;
}

using ExactGraph = GainGraph<Rational>;
using FloatGraph = GainGraph<double>;

/// Every edge gets gain 1.
template <Scalar T>
GainGraph<T> with_unit_gains(const SimpleGraph& g);

template <Scalar T>
GainGraph<double> to_float_graph(const GainGraph<T>& g);

// ---- matrices and rank --------------------------------------------------------

template <Scalar T>
QMatrix<T> adjacency_matrix(const GainGraph<T>& g);

template <Scalar T>
RankReport graph_rank(const GainGraph<T>& g, RankMethod method = RankMethod::elimination,
                      double tol = kDefaultTolerance) {
  return matrix_rank(adjacency_matrix(g), method, tol);
}

// ---- cycles -------------------------------------------------------------------

struct GirthResult {
  std::optional<std::size_t> girth;
  std::vector<Vertex> cycle;  // a shortest cycle, empty for forests
};

GirthResult girth(const SimpleGraph& g);

template <Scalar T>
GirthResult girth(const GainGraph<T>& g) {
  return girth(g.underlying());
}

/// Checks consecutive pairs and the wraparound pair are edges and vertices
/// are distinct. Throws NotACycle otherwise.
void validate_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle);

/// phi(v1 v2) phi(v2 v3) ... phi(vn v1).
template <Scalar T>
Quaternion<T> cycle_gain(const GainGraph<T>& g, const std::vector<Vertex>& cycle);

enum class CycleType { Type1, Type2, Type3, Type4 };

std::string to_string(CycleType t);

/// Float-tower decisions within this distance of the boundary are taken as
/// on it; beyond kRefuseBand they are clear-cut.
inline constexpr double kTypeTolerance = 1e-9;
inline constexpr double kRefuseBand = 1e-6;

struct CycleClassification {
  CycleType type;
  bool approximate = false;  // float tower
  double margin = 0.0;       // distance from the Type1/Type4 boundary
};

/// Even length: Type1 iff phi = (-1)^{n/2}, else Type2. Odd length: Type4 iff
/// Re((-1)^{(n-1)/2} phi) = 0, else Type3.
template <Scalar T>
CycleClassification classify_cycle_gain(std::size_t length, const Quaternion<T>& phi);

template <Scalar T>
CycleClassification classify_cycle(const GainGraph<T>& g, const std::vector<Vertex>& cycle) {
  return classify_cycle_gain(cycle.size(), cycle_gain(g, cycle));
}

/// classify_cycle, but throws AmbiguousType if a float decision falls in the
/// band (kTypeTolerance, kRefuseBand).
template <Scalar T>
CycleType decide_cycle_type(const GainGraph<T>& g, const std::vector<Vertex>& cycle);

/// Gain that, placed on one edge of an n-cycle whose other gains are 1,
/// produces the requested type. Throws std::invalid_argument on a parity
/// mismatch.
ExactQuat type_target_gain(std::size_t length, CycleType type);

bool type_matches_parity(std::size_t length, CycleType type);

/// All simple cycles, each once: starts at its minimum vertex, and the
/// second vertex is smaller than the last.
std::vector<std::vector<Vertex>> simple_cycles(const SimpleGraph& g);

// ---- switching ----------------------------------------------------------------

template <Scalar T>
struct SwitchingFunction {
  std::vector<Quaternion<T>> xi;
};

/// phi'(uv) = xi(u)^-1 phi(uv) xi(v).
template <Scalar T>
GainGraph<T> apply_switching(const GainGraph<T>& g, const SwitchingFunction<T>& xi);

template <Scalar T>
struct Normalized {
  GainGraph<T> graph;
  SwitchingFunction<T> xi;
  std::vector<std::pair<Vertex, Vertex>> tree_edges;
};

/// BFS tree from root with xi(v) = phi(path v -> root); tree edges end up
/// with gain 1. Throws DisconnectedGraph.
template <Scalar T>
Normalized<T> normalize_by_spanning_tree(const GainGraph<T>& g, Vertex root = 0);

// ---- subgraphs ----------------------------------------------------------------

template <Scalar T>
struct Subgraph {
  GainGraph<T> graph;
  std::vector<Vertex> origin;  // origin[new] = old vertex id
};

/// Keeps the listed vertices in increasing order.
template <Scalar T>
Subgraph<T> induced_subgraph(const GainGraph<T>& g, const std::vector<Vertex>& keep);

template <Scalar T>
Subgraph<T> delete_vertices(const GainGraph<T>& g, const std::vector<Vertex>& drop);

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

/// Every vertex outside s has a neighbor in s.
bool is_dominating_set(const SimpleGraph& g, const std::vector<Vertex>& s);

/// Shortest path by BFS, endpoints included; empty if unreachable.
std::vector<Vertex> shortest_path(const SimpleGraph& g, Vertex from, Vertex to);

/// Edge-preserving bijection pattern -> target (map[p] = t), if the two are
/// isomorphic.
std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& pattern,
                                                    const SimpleGraph& target);

/// Every bijection pattern -> target, in lexicographic order of the map.
std::vector<std::vector<Vertex>> all_isomorphisms(const SimpleGraph& pattern,
                                                  const SimpleGraph& target);

}  // namespace qgg
