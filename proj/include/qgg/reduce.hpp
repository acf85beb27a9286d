#pragma once

// Rank-accounting reductions and structural recognizers.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgg/graph.hpp"

namespace qgg {

// ---- reductions ---------------------------------------------------------------

template <Scalar T>
struct PendantTrim {
  Subgraph<T> graph;
  std::size_t pairs = 0;
  /// (pendant, neighbor) in original vertex ids, in deletion order.
  std::vector<std::pair<Vertex, Vertex>> ledger;
};

/// Repeatedly deletes the lowest-index pendant vertex together with its
/// neighbor. rank(G) = rank(result) + 2 * pairs.
template <Scalar T>
PendantTrim<T> trim_pendant_pairs(const GainGraph<T>& g);

/// Repeatedly deletes the higher-index member of a pair of pendant vertices
/// with a common neighbor. Rank is unchanged.
template <Scalar T>
Subgraph<T> remove_pendant_twins(const GainGraph<T>& g);

template <Scalar T>
struct MultiplePair {
  Vertex x;
  Vertex y;
  Quaternion<T> k;  // phi(x z) = k phi(y z) for every neighbor z
};

/// Pairs x < y with N(x) = N(y) nonempty and left-proportional gain rows.
/// The float tower compares coefficients to within kTypeTolerance.
template <Scalar T>
std::vector<MultiplePair<T>> find_multiple_vertices(const GainGraph<T>& g);

template <Scalar T>
struct Reduction {
  Subgraph<T> graph;
  std::vector<Vertex> removed;  // original ids, in deletion order
};

/// Deletes one vertex of a multiple pair until none remain. The first pair in
/// lexicographic order is handled first and its larger vertex is removed.
template <Scalar T>
Reduction<T> reduced_graph(const GainGraph<T>& g);

/// Same fixpoint, choosing the pair and the member to delete with `pick`
/// (index into the current pair list, then 0 for x or 1 for y). Used to test
/// order independence.
template <Scalar T, class Pick>
Reduction<T> reduced_graph_with(const GainGraph<T>& g, Pick pick);

// ---- recognition --------------------------------------------------------------

enum class Family {
  Path,
  Star,
  Cycle,
  Complete,
  CompleteBipartite,
  CompleteTripartite,
  CanonicalUnicyclic,
  Infinity,
  Theta,
  Other
};

std::string to_string(Family f);

/// One structural match. Parameters and witness by family:
///   Path(n)                     witness: {vertices in path order}
///   Star(n)                     {center}, {leaves}
///   Cycle(g)                    {vertices in cycle order}
///   Complete(n)                 {vertices}
///   CompleteBipartite(a, b)     {part containing vertex 0}, {other part}
///   CompleteTripartite(r, s, t) three parts, ordered by least vertex
///   CanonicalUnicyclic(g, t, k) {cycle order}, {starred cycle vertices}
///   Infinity(p, l, q)           {cycle p}, {connecting path, l vertices},
///                               {cycle q}; cycles start at the path end
///   Theta(p, l, q)              three x..y paths with p, l, q internal
///                               vertices, p <= l <= q
struct Shape {
  Family family = Family::Other;
  std::vector<std::size_t> params;
  std::vector<std::vector<Vertex>> witness;
};

struct ShapeReport : Shape {
  /// Other families that also match, lower precedence first.
  std::vector<Shape> alternatives;

  /// The match for f, whether primary or alternative.
  std::optional<Shape> as(Family f) const;
};

/// Certifies the structural family of a connected graph. When several match,
/// the later one in Path < Star < Cycle < Complete < CompleteBipartite <
/// CompleteTripartite < CanonicalUnicyclic < Infinity < Theta wins. Throws
/// DisconnectedGraph.
ShapeReport recognize(const SimpleGraph& g);

template <Scalar T>
ShapeReport recognize(const GainGraph<T>& g) {
  return recognize(g.underlying());
}

/// Re-checks a witness against the graph.
bool validate_shape(const SimpleGraph& g, const Shape& s);

/// Strips pendant trees. If the remaining 2-core is an infinity or theta
/// skeleton returns its shape (witness in original ids) and the core vertex
/// set.
struct BicyclicCore {
  Shape shape;
  std::vector<Vertex> core;
  bool has_pendants = false;
};
std::optional<BicyclicCore> bicyclic_core(const SimpleGraph& g);

/// Repeatedly removes degree-one vertices; returns the survivors.
std::vector<Vertex> two_core(const SimpleGraph& g);

// ---- template definitions -------------------------------------------------------

template <Scalar T, class Pick>
Reduction<T> reduced_graph_with(const GainGraph<T>& g, Pick pick) {
  Reduction<T> out;
  out.graph.graph = g;
  for (Vertex v = 0; v < g.order(); ++v) out.graph.origin.push_back(v);
  for (;;) {
    const auto pairs = find_multiple_vertices(out.graph.graph);
    if (pairs.empty()) break;
    const auto [idx, which] = pick(pairs);
    const Vertex local = which == 0 ? pairs[idx].x : pairs[idx].y;
    out.removed.push_back(out.graph.origin[local]);
    Subgraph<T> next = delete_vertices(out.graph.graph, {local});
    for (auto& o : next.origin) o = out.graph.origin[o];
    out.graph = std::move(next);
  }
  return out;
}

}  // namespace qgg
