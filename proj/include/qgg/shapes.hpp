#pragma once

// Named graph templates and gain constructors.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qgg/graph.hpp"

namespace qgg {

/// Builds a simple graph from 1-indexed edge pairs.
SimpleGraph graph_from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges);

/// A labeled skeleton together with a cycle basis. Each designated arc lies
/// on exactly one basis cycle and is traversed in the arc's direction, so
/// putting gain g on it (gain 1 elsewhere) makes that cycle's gain g.
struct Template {
  std::string name;
  SimpleGraph graph;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<std::pair<Vertex, Vertex>> designated;
};

/// Gain 1 on every edge except the designated arcs, which carry
/// cycle_gains[i].
template <Scalar T>
GainGraph<T> realize(const Template& t, const std::vector<Quaternion<T>>& cycle_gains);

/// Same, choosing each basis cycle's gain as the target for `types[i]`.
ExactGraph realize_types(const Template& t, const std::vector<CycleType>& types);

/// G1..G11: the bicyclic skeletons without pendant vertices.
const std::vector<Template>& table1_templates();
/// G12..G22: bicyclic graphs with pendant vertices.
const std::vector<Template>& table2_templates();
const Template& template_by_name(const std::string& name);

Template theta_133();
Template theta_333();
/// The tricyclic graph on ten vertices with three 6-cycles.
Template g0_template();

// ---- worked examples ------------------------------------------------------------

ExactGraph figure2_graph();  // K_{3,2}, every 4-cycle gain 1
ExactGraph figure6_graph();  // theta(0,1,1) with a Type 4 triangle
ExactGraph figure9_graph();  // theta(1,1,1), 4-cycles of Type 1 and Type 2

// ---- families -------------------------------------------------------------------

/// n-cycle 0..n-1 with gain 1 except the closing arc (n-1 -> 0).
ExactGraph typed_cycle(std::size_t n, CycleType type);

template <Scalar T>
GainGraph<T> path_graph(const std::vector<Quaternion<T>>& gains);

/// Cycle 0..g-1; cycle vertex i carries stars[i] pendant leaves.
template <Scalar T>
GainGraph<T> canonical_unicyclic(const std::vector<std::size_t>& stars,
                                 const std::vector<Quaternion<T>>& cycle_gains);

/// Cycle 0..g-1 of the given type, vertex 0 joined to the center g of a star
/// with q leaves g+1..g+q.
ExactGraph cycle_with_joined_star(std::size_t g, CycleType type, std::size_t q);

/// Complete graph on four vertices with the given gains on 01 02 03 12 13 23.
template <Scalar T>
GainGraph<T> k4_graph(const std::vector<Quaternion<T>>& gains);

}  // namespace qgg
