#include <gtest/gtest.h>

#include <algorithm>

#include "qgg/graph.hpp"
#include "qgg/shapes.hpp"

using namespace qgg;

namespace {

ExactGraph random_graph(Rng& rng, std::size_t n, int density) {
  std::uniform_int_distribution<int> coin(0, 9);
  ExactGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < density) g.add_edge(u, v, random_lipschitz_unit<Rational>(rng));
  return g;
}

ExactGraph connected_graph(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<int> coin(0, 9);
  ExactGraph g(n);
  for (Vertex v = 1; v < n; ++v)
    g.add_edge(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v, random_rational_unit(rng));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && coin(rng) < 3) g.add_edge(u, v, random_rational_unit(rng));
  return g;
}

SwitchingFunction<Rational> random_xi(Rng& rng, std::size_t n) {
  SwitchingFunction<Rational> xi;
  for (std::size_t v = 0; v < n; ++v) xi.xi.push_back(random_rational_unit(rng));
  return xi;
}

std::size_t rank(const ExactGraph& g) { return graph_rank(g).rank; }

}  // namespace

TEST(Graph, EdgeValidation) {
  ExactGraph g(3);
  g.add_edge(0, 1, ExactQuat::i());
  EXPECT_EQ(g.gain(0, 1), ExactQuat::i());
  EXPECT_EQ(g.gain(1, 0), -ExactQuat::i());
  EXPECT_THROW(g.add_edge(1, 0, ExactQuat::one()), InvalidGraph);
  EXPECT_THROW(g.add_edge(2, 2, ExactQuat::one()), InvalidGraph);
  EXPECT_THROW(g.add_edge(0, 2, ExactQuat(1, 1, 0, 0)), InvalidGraph);
  EXPECT_THROW(g.add_edge(0, 3, ExactQuat::one()), VertexOutOfRange);
  EXPECT_THROW(g.gain(0, 2), InvalidGraph);
  EXPECT_EQ(g.size(), 1u);
}

TEST(Graph, ReverseInsertionStoresConjugate) {
  ExactGraph g(2);
  g.add_edge(1, 0, ExactQuat::j());
  const auto e = g.edges();
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].u, 0u);
  EXPECT_EQ(e[0].gain, -ExactQuat::j());
}

TEST(Graph, AdjacencyIsHermitian) {
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_graph(rng, 1 + t % 8, 5);
    const auto a = adjacency_matrix(g);
    EXPECT_TRUE(a.is_hermitian());
    for (std::size_t v = 0; v < g.order(); ++v) EXPECT_TRUE(is_zero(a(v, v)));
  }
  ExactGraph e(2);
  e.add_edge(0, 1, ExactQuat::i());
  EXPECT_EQ(adjacency_matrix(e)(1, 0), -ExactQuat::i());
  EXPECT_EQ(rank(ExactGraph(3)), 0u);
}

TEST(Graph, GirthMatchesCycleEnumeration) {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(rng, 1 + t % 8, 1 + t % 6);
    const auto cycles = simple_cycles(g.underlying());
    const auto gr = girth(g);
    if (cycles.empty()) {
      EXPECT_FALSE(gr.girth);
      EXPECT_TRUE(gr.cycle.empty());
      continue;
    }
    std::size_t shortest = g.order() + 1;
    for (const auto& c : cycles) shortest = std::min(shortest, c.size());
    ASSERT_TRUE(gr.girth);
    EXPECT_EQ(*gr.girth, shortest);
    EXPECT_EQ(gr.cycle.size(), shortest);
    EXPECT_NO_THROW(validate_cycle(g.underlying(), gr.cycle));
  }
}

TEST(Graph, SimpleCyclesCounts) {
  EXPECT_EQ(simple_cycles(typed_cycle(6, CycleType::Type1).underlying()).size(), 1u);
  EXPECT_EQ(simple_cycles(figure9_graph().underlying()).size(), 3u);
  std::vector<ExactQuat> ones(6, ExactQuat::one());
  EXPECT_EQ(simple_cycles(k4_graph<Rational>(ones).underlying()).size(), 7u);
}

TEST(Graph, CycleGainExamples) {
  EXPECT_EQ(cycle_gain(figure2_graph(), {0, 3, 1, 4}), ExactQuat::one());
  EXPECT_EQ(cycle_gain(figure9_graph(), {0, 1, 4, 3}), ExactQuat::j());
  EXPECT_EQ(cycle_gain(figure6_graph(), {0, 1, 3}), -ExactQuat::j());
  EXPECT_THROW(cycle_gain(figure9_graph(), {0, 1, 2}), NotACycle);
  EXPECT_THROW(cycle_gain(figure9_graph(), {0, 1, 0, 3}), NotACycle);
}

TEST(Graph, TypeDefinitions) {
  EXPECT_EQ(decide_cycle_type(typed_cycle(4, CycleType::Type1), {0, 1, 2, 3}), CycleType::Type1);
  EXPECT_EQ(decide_cycle_type(figure9_graph(), {0, 1, 4, 3}), CycleType::Type2);
  EXPECT_EQ(decide_cycle_type(figure6_graph(), {0, 1, 3}), CycleType::Type4);
  // C6 with all gains 1: phi = 1 != (-1)^3.
  EXPECT_EQ(decide_cycle_type(typed_cycle(6, CycleType::Type2), {0, 1, 2, 3, 4, 5}), CycleType::Type2);
  for (std::size_t n = 3; n <= 10; ++n)
    for (CycleType t : {CycleType::Type1, CycleType::Type2, CycleType::Type3, CycleType::Type4}) {
      EXPECT_EQ(type_matches_parity(n, t), (n % 2 == 0) == (t == CycleType::Type1 || t == CycleType::Type2));
      if (!type_matches_parity(n, t)) {
        EXPECT_THROW(type_target_gain(n, t), std::invalid_argument);
        continue;
      }
      std::vector<Vertex> c(n);
      for (Vertex v = 0; v < n; ++v) c[v] = v;
      EXPECT_EQ(decide_cycle_type(typed_cycle(n, t), c), t);
    }
}

TEST(Graph, TypeInvariantUnderRotationReversalSwitching) {
  Rng rng(3);
  for (std::size_t n = 3; n <= 9; ++n)
    for (CycleType t : {CycleType::Type1, CycleType::Type2, CycleType::Type3, CycleType::Type4}) {
      if (!type_matches_parity(n, t)) continue;
      const auto g = apply_switching(typed_cycle(n, t), random_xi(rng, n));
      std::vector<Vertex> c(n);
      for (Vertex v = 0; v < n; ++v) c[v] = v;
      for (std::size_t r = 0; r < n; ++r) {
        std::rotate(c.begin(), c.begin() + 1, c.end());
        EXPECT_EQ(decide_cycle_type(g, c), t);
        std::vector<Vertex> rev(c.rbegin(), c.rend());
        EXPECT_EQ(decide_cycle_type(g, rev), t);
      }
    }
}

TEST(Graph, SwitchingPreservesRank) {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_graph(rng, 2 + t % 7, 5);
    const std::size_t r = rank(g);
    SwitchingFunction<Rational> id{std::vector<ExactQuat>(g.order(), ExactQuat::one())};
    EXPECT_EQ(apply_switching(g, id), g);
    for (int s = 0; s < 50; ++s) EXPECT_EQ(rank(apply_switching(g, random_xi(rng, g.order()))), r);
  }
}

TEST(Graph, NormalizeBySpanningTree) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto g = connected_graph(rng, 2 + t % 8);
    const auto norm = normalize_by_spanning_tree(g);
    EXPECT_EQ(norm.tree_edges.size(), g.order() - 1);
    for (auto [u, v] : norm.tree_edges) EXPECT_EQ(norm.graph.gain(u, v), ExactQuat::one());
    EXPECT_EQ(apply_switching(g, norm.xi), norm.graph);
    EXPECT_EQ(rank(norm.graph), rank(g));
  }
  ExactGraph split(3);
  split.add_edge(0, 1, ExactQuat::one());
  EXPECT_THROW(normalize_by_spanning_tree(split), DisconnectedGraph);
}

TEST(Graph, FloatTowerAmbiguity) {
  // Odd cycle whose Re((-1)^{(n-1)/2} phi) is about 1e-7: inside the refusal band.
  FloatGraph g(3);
  const double e = 1e-7;
  g.add_edge(0, 1, FloatQuat::one());
  g.add_edge(1, 2, FloatQuat::one());
  g.add_edge(2, 0, normalized(FloatQuat(e, 1, 0, 0)));
  EXPECT_THROW(decide_cycle_type(g, {0, 1, 2}), AmbiguousType);
  const auto cls = classify_cycle(g, {0, 1, 2});
  EXPECT_TRUE(cls.approximate);
  FloatGraph h(3);
  h.add_edge(0, 1, FloatQuat::one());
  h.add_edge(1, 2, FloatQuat::one());
  h.add_edge(2, 0, normalized(FloatQuat(1e-12, 1, 0, 0)));
  EXPECT_EQ(decide_cycle_type(h, {0, 1, 2}), CycleType::Type4);
}

TEST(Graph, Subgraphs) {
  const auto g = figure9_graph();
  const auto sub = delete_vertices(g, {4});
  EXPECT_EQ(sub.origin, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(sub.graph.size(), 4u);
  EXPECT_EQ(sub.graph.gain(0, 1), g.gain(0, 1));
  const auto ind = induced_subgraph(g, {3, 0, 4});
  EXPECT_EQ(ind.origin, (std::vector<Vertex>{0, 3, 4}));
  EXPECT_EQ(ind.graph.size(), 2u);
  EXPECT_THROW(delete_vertices(g, {9}), VertexOutOfRange);
}

TEST(Graph, DeletingAVertexMovesRankByAtMostTwo) {
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_graph(rng, 2 + t % 7, 5);
    const std::size_t r = rank(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::size_t s = rank(delete_vertices(g, {v}).graph);
      EXPECT_LE(s, r);
      EXPECT_GE(s + 2, r);
    }
  }
}

TEST(Graph, UtilityQueries) {
  const auto c4 = typed_cycle(4, CycleType::Type1).underlying();
  EXPECT_FALSE(is_dominating_set(c4, {0}));
  EXPECT_TRUE(is_dominating_set(c4, {0, 2}));
  EXPECT_TRUE(is_connected(c4));
  SimpleGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_EQ(connected_components(two).size(), 2u);
  EXPECT_TRUE(shortest_path(two, 0, 3).empty());
  EXPECT_EQ(shortest_path(c4, 0, 2).size(), 3u);
}

TEST(Graph, Isomorphism) {
  const auto a = figure2_graph().underlying();
  const auto b = figure9_graph().underlying();
  const auto map = find_isomorphism(a, b);
  ASSERT_TRUE(map);
  for (auto [u, v] : a.edges()) EXPECT_TRUE(b.has_edge((*map)[u], (*map)[v]));
  // K_{3,2} has 3! * 2! automorphisms.
  EXPECT_EQ(all_isomorphisms(a, a).size(), 12u);
  EXPECT_FALSE(find_isomorphism(a, typed_cycle(5, CycleType::Type3).underlying()));
}

TEST(Graph, DominatingCycleWhenRankMatches) {
  // If r(G) = r(C_g) for a shortest cycle, that cycle dominates G.
  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto g = connected_graph(rng, 3 + t % 5);
    const auto gr = girth(g);
    if (!gr.girth) continue;
    const auto c = induced_subgraph(g, gr.cycle);
    if (rank(c.graph) == rank(g)) {
      std::vector<Vertex> vs(gr.cycle);
      EXPECT_TRUE(is_dominating_set(g.underlying(), vs));
    }
  }
}
