#include <gtest/gtest.h>

#include <algorithm>

#include "qgg/graph_io.hpp"
#include "qgg/reduce.hpp"
#include "qgg/shapes.hpp"

using namespace qgg;

namespace {

std::size_t rank(const ExactGraph& g) { return graph_rank(g, RankMethod::both).rank; }

ExactGraph ones(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  return with_unit_gains<Rational>(graph_from_edges(n, edges));
}

ExactGraph random_graph(Rng& rng, std::size_t n, int density) {
  std::uniform_int_distribution<int> coin(0, 9);
  ExactGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < density) g.add_edge(u, v, random_lipschitz_unit<Rational>(rng));
  return g;
}

/// Appends a copy y of x with phi(y z) = k^-1 phi(x z), so x and y are multiple.
ExactGraph with_multiple(const ExactGraph& g, Vertex x, const ExactQuat& k) {
  ExactGraph h(g.order() + 1);
  for (const auto& e : g.edges()) h.add_edge(e.u, e.v, e.gain);
  for (Vertex z : g.neighbors(x)) h.add_edge(g.order(), z, inverse(k) * g.gain(x, z));
  return h;
}

}  // namespace

TEST(Reduce, TrimPendantPairs) {
  const auto p4 = path_graph<Rational>({ExactQuat::i(), ExactQuat::j(), ExactQuat::k()});
  const auto t = trim_pendant_pairs(p4);
  EXPECT_EQ(t.pairs, 2u);
  EXPECT_EQ(t.graph.graph.order(), 0u);
  EXPECT_EQ(t.ledger, (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}}));

  const auto c5 = typed_cycle(5, CycleType::Type3);
  EXPECT_EQ(trim_pendant_pairs(c5).pairs, 0u);
  EXPECT_EQ(trim_pendant_pairs(c5).graph.graph, c5);

  // C5 plus a pendant at 0: pendant and 0 go, P4 remains.
  auto tail = ones(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}});
  const auto tt = trim_pendant_pairs(tail);
  EXPECT_EQ(tt.pairs, 1u + 2u);
  EXPECT_EQ(rank(tail), rank(tt.graph.graph) + 2 * tt.pairs);
}

TEST(Reduce, RemovePendantTwins) {
  const auto star = ones(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  const auto s = remove_pendant_twins(star);
  EXPECT_EQ(s.graph.order(), 2u);
  EXPECT_EQ(s.graph.size(), 1u);
  EXPECT_EQ(s.origin, (std::vector<Vertex>{0, 1}));

  const auto c = canonical_unicyclic<Rational>({2, 0, 3, 0, 1}, std::vector<ExactQuat>(5, ExactQuat::one()));
  const auto r = remove_pendant_twins(c);
  EXPECT_EQ(r.graph.order(), 5u + 3u);
  EXPECT_EQ(rank(r.graph), rank(c));

  const auto fig9 = figure9_graph();
  EXPECT_EQ(remove_pendant_twins(fig9).graph, fig9);
}

TEST(Reduce, MultipleVertices) {
  const auto pairs = find_multiple_vertices(figure6_graph());
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].x, 0u);
  EXPECT_EQ(pairs[0].y, 2u);
  EXPECT_EQ(pairs[0].k, -ExactQuat::k());

  // Pendant twins with equal gains are multiple with k = 1.
  const auto twins = ones(3, {{1, 2}, {1, 3}});
  const auto tp = find_multiple_vertices(twins);
  ASSERT_EQ(tp.size(), 1u);
  EXPECT_EQ(tp[0].k, ExactQuat::one());

  std::vector<ExactQuat> g6(6, ExactQuat::one());
  EXPECT_TRUE(find_multiple_vertices(k4_graph<Rational>(g6)).empty());
}

TEST(Reduce, LeftProportionality) {
  // phi(x z) = k phi(y z) must hold with k on the left.
  ExactGraph g(4);
  const auto i = ExactQuat::i(), j = ExactQuat::j();
  g.add_edge(0, 2, i);
  g.add_edge(0, 3, j);
  g.add_edge(1, 2, ExactQuat::one());
  // Right proportional only: phi(0 z) = phi(1 z) i for both z.
  g.add_edge(1, 3, j * inverse(i));
  auto has_01 = [](const auto& pairs) {
    return std::find_if(pairs.begin(), pairs.end(), [](const auto& p) { return p.x == 0 && p.y == 1; });
  };
  const auto right = find_multiple_vertices(g);
  EXPECT_EQ(has_01(right), right.end());
  ExactGraph h(4);
  h.add_edge(0, 2, i);
  h.add_edge(0, 3, j);
  h.add_edge(1, 2, ExactQuat::one());
  h.add_edge(1, 3, inverse(i) * j);
  const auto left = find_multiple_vertices(h);
  const auto it = has_01(left);
  ASSERT_NE(it, left.end());
  EXPECT_EQ(it->k, i);
}

TEST(Reduce, ReducedGraphExamples) {
  const auto red = reduced_graph(figure6_graph());
  EXPECT_EQ(red.graph.origin, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_EQ(red.removed, (std::vector<Vertex>{2}));
  EXPECT_EQ(decide_cycle_type(red.graph.graph, {0, 1, 2}), CycleType::Type4);

  // K_{2,2,1} with unit gains: each part collapses to one vertex.
  const auto k221 = ones(5, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
  const auto tri = reduced_graph(k221);
  EXPECT_EQ(tri.graph.graph.order(), 3u);
  EXPECT_EQ(tri.graph.graph.size(), 3u);
  EXPECT_EQ(rank(tri.graph.graph), rank(k221));

  const auto again = reduced_graph(tri.graph.graph);
  EXPECT_TRUE(again.removed.empty());
  EXPECT_EQ(again.graph.graph, tri.graph.graph);
}

TEST(Reduce, IdentitiesOnRandomGraphs) {
  Rng rng(8);
  std::uniform_int_distribution<int> pick01(0, 1);
  for (int t = 0; t < 60; ++t) {
    auto g = random_graph(rng, 2 + t % 7, 2 + t % 5);
    for (int c = 0; c < 2; ++c) {
      const Vertex x = std::uniform_int_distribution<Vertex>(0, g.order() - 1)(rng);
      if (!g.neighbors(x).empty()) g = with_multiple(g, x, random_rational_unit(rng));
    }
    const std::size_t r = rank(g);
    const auto trim = trim_pendant_pairs(g);
    EXPECT_EQ(rank(trim.graph.graph) + 2 * trim.pairs, r);
    EXPECT_EQ(rank(remove_pendant_twins(g).graph), r);
    const auto red = reduced_graph(g);
    EXPECT_EQ(rank(red.graph.graph), r);
    EXPECT_TRUE(find_multiple_vertices(red.graph.graph).empty());
    for (int order = 0; order < 3; ++order) {
      const auto other = reduced_graph_with(g, [&](const auto& pairs) {
        return std::pair<std::size_t, int>{std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng),
                                           pick01(rng)};
      });
      EXPECT_EQ(other.graph.graph.order(), red.graph.graph.order());
      EXPECT_EQ(rank(other.graph.graph), r);
    }
  }
}

TEST(Recognize, Families) {
  struct Case {
    ExactGraph g;
    Family family;
    std::vector<std::size_t> params;
  };
  const std::vector<Case> cases = {
      {ones(1, {}), Family::Complete, {1}},
      {ones(4, {{1, 2}, {2, 3}, {3, 4}}), Family::Path, {4}},
      {ones(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}), Family::Cycle, {5}},
      {ones(3, {{1, 2}, {2, 3}, {3, 1}}), Family::CompleteTripartite, {1, 1, 1}},
      {ones(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}), Family::Complete, {4}},
      {ones(4, {{1, 2}, {1, 3}, {1, 4}}), Family::CompleteBipartite, {1, 3}},
      {ones(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}}),
       Family::CompleteBipartite,
       {3, 3}},
      {ones(5, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}), Family::CompleteTripartite, {2, 2, 1}},
      {ones(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}}), Family::Infinity, {}},
      {figure9_graph(), Family::Theta, {1, 1, 1}},
      {figure6_graph(), Family::Theta, {0, 1, 1}},
      {canonical_unicyclic<Rational>({1, 0, 0, 1, 0, 0}, std::vector<ExactQuat>(6, ExactQuat::one())),
       Family::CanonicalUnicyclic,
       {6, 2, 2}},
      {canonical_unicyclic<Rational>({1, 1, 0, 0}, std::vector<ExactQuat>(4, ExactQuat::one())),
       Family::CanonicalUnicyclic,
       {4, 2, 2}},
      {canonical_unicyclic<Rational>({1, 0, 1, 0}, std::vector<ExactQuat>(4, ExactQuat::one())),
       Family::CanonicalUnicyclic,
       {4, 2, 0}},
      {ones(6, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}), Family::Other, {}},
  };
  for (const auto& c : cases) {
    const auto s = recognize(c.g);
    EXPECT_EQ(s.family, c.family) << emit_graph(c.g) << " got " << to_string(s.family);
    if (!c.params.empty()) EXPECT_EQ(s.params, c.params) << to_string(s.family);
    EXPECT_TRUE(validate_shape(c.g.underlying(), s));
    for (const auto& alt : s.alternatives) EXPECT_TRUE(validate_shape(c.g.underlying(), alt));
  }
}

TEST(Recognize, OverlapsAreKeptAsAlternatives) {
  const auto fig2 = recognize(figure2_graph());
  EXPECT_EQ(fig2.family, Family::Theta);
  const auto kab = fig2.as(Family::CompleteBipartite);
  ASSERT_TRUE(kab);
  EXPECT_EQ(kab->params, (std::vector<std::size_t>{3, 2}));
  const auto star = recognize(ones(4, {{1, 2}, {1, 3}, {1, 4}}));
  EXPECT_TRUE(star.as(Family::Star));
  const auto k3 = recognize(typed_cycle(3, CycleType::Type3));
  EXPECT_TRUE(k3.as(Family::Complete));
  EXPECT_TRUE(k3.as(Family::Cycle));
  const auto c4 = recognize(typed_cycle(4, CycleType::Type1));
  EXPECT_EQ(c4.family, Family::CompleteBipartite);
  EXPECT_TRUE(c4.as(Family::Cycle));
  EXPECT_FALSE(c4.as(Family::Theta));
}

TEST(Recognize, WitnessValidation) {
  const auto g = figure9_graph();
  auto s = recognize(g);
  EXPECT_TRUE(validate_shape(g.underlying(), s));
  Shape broken = s;
  std::swap(broken.witness[0], broken.witness[1]);
  broken.params = {2, 1, 1};
  EXPECT_FALSE(validate_shape(g.underlying(), broken));
  Shape wrong{Family::Cycle, {5}, {{0, 1, 2, 3, 4}}};
  EXPECT_FALSE(validate_shape(g.underlying(), wrong));
}

TEST(Recognize, DisconnectedThrows) {
  EXPECT_THROW(recognize(ones(4, {{1, 2}, {3, 4}})), DisconnectedGraph);
}

TEST(Recognize, BicyclicCore) {
  auto g = ones(7, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}, {5, 6}, {6, 7}});
  const auto core = bicyclic_core(g.underlying());
  ASSERT_TRUE(core);
  EXPECT_TRUE(core->has_pendants);
  EXPECT_EQ(core->shape.family, Family::Infinity);
  EXPECT_EQ(core->core.size(), 5u);
  EXPECT_EQ(two_core(g.underlying()), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_FALSE(bicyclic_core(typed_cycle(5, CycleType::Type3).underlying()));
}
