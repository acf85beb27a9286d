#include "qgg/shapes.hpp"

#include <stdexcept>

namespace qgg {

SimpleGraph graph_from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  return g;
}

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Template make(std::string name, std::size_t n, const Pairs& edges,
              const std::vector<std::vector<int>>& cycles, const Pairs& designated) {
  Template t{std::move(name), graph_from_edges(n, edges), {}, {}};
  for (const auto& c : cycles) {
    std::vector<Vertex> cyc;
    for (int v : c) cyc.push_back(static_cast<Vertex>(v - 1));
    t.cycles.push_back(std::move(cyc));
  }
  for (auto [u, v] : designated) t.designated.emplace_back(u - 1, v - 1);
  return t;
}

Pairs plus(Pairs base, const Pairs& extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

const Pairs kG5 = {{1, 2}, {2, 4}, {1, 4}, {2, 3}, {3, 4}};
const Pairs kG9 = {{1, 2}, {2, 5}, {4, 5}, {1, 4}, {2, 3}, {3, 4}};
const Pairs kTheta011 = {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {3, 4}};

}  // namespace

template <Scalar T>
GainGraph<T> realize(const Template& t, const std::vector<Quaternion<T>>& cycle_gains) {
  if (cycle_gains.size() != t.designated.size())
    throw std::invalid_argument("template " + t.name + " needs " +
                                std::to_string(t.designated.size()) + " cycle gains");
  GainGraph<T> g(t.graph.order());
  for (auto [u, v] : t.graph.edges()) {
    Quaternion<T> gain = Quaternion<T>::one();
    for (std::size_t i = 0; i < t.designated.size(); ++i) {
      if (t.designated[i] == std::pair<Vertex, Vertex>{u, v}) gain = cycle_gains[i];
      if (t.designated[i] == std::pair<Vertex, Vertex>{v, u}) gain = conj(cycle_gains[i]);
    }
    g.add_edge(u, v, gain);
  }
  return g;
}

ExactGraph realize_types(const Template& t, const std::vector<CycleType>& types) {
  if (types.size() != t.cycles.size())
    throw std::invalid_argument("template " + t.name + " needs one type per basis cycle");
  std::vector<ExactQuat> gains;
  for (std::size_t i = 0; i < types.size(); ++i)
    gains.push_back(type_target_gain(t.cycles[i].size(), types[i]));
  return realize(t, gains);
}

const std::vector<Template>& table1_templates() {
  static const std::vector<Template> all = {
      make("G1", 5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}}, {{1, 3, 2}, {1, 5, 4}},
           {{3, 2}, {5, 4}}),
      make("G2", 6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 6}},
           {{1, 2, 3}, {3, 4, 5, 6}}, {{1, 2}, {5, 6}}),
      make("G3", 7, {{1, 2}, {2, 4}, {3, 4}, {1, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}},
           {{1, 2, 4, 3}, {4, 5, 6, 7}}, {{1, 2}, {5, 6}}),
      make("G4", 6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}},
           {{1, 2, 3}, {4, 5, 6}}, {{2, 3}, {5, 6}}),
      make("G5", 4, kG5, {{1, 2, 4}, {1, 2, 3, 4}}, {{2, 4}, {3, 4}}),
      make("G6", 5, {{1, 2}, {2, 5}, {1, 5}, {2, 3}, {3, 4}, {4, 5}},
           {{1, 2, 5}, {1, 2, 3, 4, 5}}, {{2, 5}, {4, 5}}),
      make("G7", 6, {{1, 2}, {2, 6}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}},
           {{1, 2, 6}, {1, 2, 3, 4, 5, 6}}, {{2, 6}, {5, 6}}),
      make("G8", 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {2, 5}},
           {{1, 2, 5, 6}, {1, 2, 3, 4, 5, 6}}, {{2, 5}, {4, 5}}),
      make("G9", 5, kG9, {{1, 2, 5, 4}, {1, 2, 3, 4}}, {{2, 5}, {3, 4}}),
      make("G10", 6, {{1, 2}, {2, 6}, {5, 6}, {1, 5}, {2, 3}, {3, 4}, {4, 5}},
           {{1, 2, 6, 5}, {1, 2, 3, 4, 5}}, {{2, 6}, {4, 5}}),
      make("G11", 7, {{1, 2}, {2, 7}, {6, 7}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}},
           {{1, 2, 7, 6}, {1, 2, 3, 4, 5, 6}}, {{2, 7}, {5, 6}}),
  };
  return all;
}

const std::vector<Template>& table2_templates() {
  static const std::vector<std::vector<int>> tri = {{1, 2, 3}, {1, 3, 4}};
  static const Pairs tri_arcs = {{1, 2}, {3, 4}};
  static const std::vector<std::vector<int>> g5c = {{1, 2, 4}, {1, 2, 3, 4}};
  static const Pairs g5a = {{2, 4}, {3, 4}};
  static const std::vector<std::vector<int>> g9c = {{1, 2, 5, 4}, {1, 2, 3, 4}};
  static const Pairs g9a = {{2, 5}, {3, 4}};
  static const std::vector<Template> all = {
      make("G12", 5, plus(kTheta011, {{4, 5}}), tri, tri_arcs),
      make("G13", 5, plus(kTheta011, {{1, 5}}), tri, tri_arcs),
      make("G14", 6, plus(kTheta011, {{1, 5}, {3, 6}}), tri, tri_arcs),
      make("G15", 6, plus(kG5, {{1, 5}, {5, 6}}), g5c, g5a),
      make("G16", 6, plus(kG5, {{2, 5}, {5, 6}}), g5c, g5a),
      make("G17", 6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 5}, {5, 6}},
           {{1, 2, 3, 4}, {1, 2, 5}}, {{3, 4}, {2, 5}}),
      make("G18", 6, plus(kG9, {{5, 6}}), g9c, g9a),
      make("G19", 6, plus(kG9, {{2, 6}}), g9c, g9a),
      make("G20", 7, plus(kG9, {{2, 6}, {4, 7}}), g9c, g9a),
      make("G21", 7, plus(kG9, {{5, 6}, {6, 7}}), g9c, g9a),
      make("G22", 7, plus(kG9, {{2, 6}, {6, 7}}), g9c, g9a),
  };
  return all;
}

const Template& template_by_name(const std::string& name) {
  for (const auto* list : {&table1_templates(), &table2_templates()})
    for (const auto& t : *list)
      if (t.name == name) return t;
  throw std::invalid_argument("unknown template '" + name + "'");
}

Template theta_133() {
  return make("theta(1,3,3)", 9,
              {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 8}, {4, 9}, {8, 9}},
              {{1, 2, 3, 4, 9, 8}, {1, 2, 3, 4, 5, 6, 7, 8}}, {{4, 9}, {7, 8}});
}

Template theta_333() {
  return make("theta(3,3,3)", 11,
              {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 8}, {4, 11}, {10, 11},
               {9, 10}, {8, 9}},
              {{1, 2, 3, 4, 11, 10, 9, 8}, {1, 2, 3, 4, 5, 6, 7, 8}}, {{4, 11}, {7, 8}});
}

Template g0_template() {
  return make("G0", 10,
              {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 8}, {1, 9}, {5, 9},
               {3, 10}, {7, 10}},
              {{1, 2, 3, 4, 5, 9}, {1, 9, 5, 6, 7, 8}, {3, 4, 5, 6, 7, 10}},
              {{2, 3}, {7, 8}, {7, 10}});
}

namespace {

ExactGraph from_gains(std::size_t n, const std::vector<std::pair<std::pair<int, int>, ExactQuat>>& e) {
  ExactGraph g(n);
  for (const auto& [uv, q] : e) g.add_edge(static_cast<Vertex>(uv.first - 1), static_cast<Vertex>(uv.second - 1), q);
  return g;
}

const ExactQuat kOne = ExactQuat::one();
const ExactQuat kI = ExactQuat::i();
const ExactQuat kJ = ExactQuat::j();
const ExactQuat kK = ExactQuat::k();

}  // namespace

ExactGraph figure2_graph() {
  return from_gains(5, {{{1, 4}, kI}, {{1, 5}, kI}, {{2, 4}, -kK}, {{2, 5}, -kK}, {{3, 4}, kJ}, {{3, 5}, kJ}});
}

ExactGraph figure6_graph() {
  return from_gains(4, {{{1, 2}, kI}, {{1, 4}, kJ}, {{2, 3}, -kJ}, {{2, 4}, -kI}, {{3, 4}, -kI}});
}

ExactGraph figure9_graph() {
  return from_gains(5, {{{1, 2}, kI}, {{1, 4}, -kK}, {{2, 3}, kI}, {{2, 5}, kJ}, {{3, 4}, kK}, {{4, 5}, -kJ}});
}

ExactGraph typed_cycle(std::size_t n, CycleType type) {
  ExactGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, kOne);
  g.add_edge(n - 1, 0, type_target_gain(n, type));
  return g;
}

template <Scalar T>
GainGraph<T> path_graph(const std::vector<Quaternion<T>>& gains) {
  GainGraph<T> g(gains.size() + 1);
  for (Vertex v = 0; v < gains.size(); ++v) g.add_edge(v, v + 1, gains[v]);
  return g;
}

template <Scalar T>
GainGraph<T> canonical_unicyclic(const std::vector<std::size_t>& stars,
                                 const std::vector<Quaternion<T>>& cycle_gains) {
  const std::size_t len = stars.size();
  if (cycle_gains.size() != len) throw std::invalid_argument("one gain per cycle edge");
  std::size_t n = len;
  for (auto s : stars) n += s;
  GainGraph<T> g(n);
  for (Vertex v = 0; v < len; ++v) g.add_edge(v, (v + 1) % len, cycle_gains[v]);
  Vertex next = len;
  for (Vertex v = 0; v < len; ++v)
    for (std::size_t s = 0; s < stars[v]; ++s) g.add_edge(v, next++, Quaternion<T>::one());
  return g;
}

ExactGraph cycle_with_joined_star(std::size_t g, CycleType type, std::size_t q) {
  ExactGraph out(g + 1 + q);
  for (Vertex v = 0; v + 1 < g; ++v) out.add_edge(v, v + 1, kOne);
  out.add_edge(g - 1, 0, type_target_gain(g, type));
  out.add_edge(0, g, kOne);
  for (std::size_t s = 1; s <= q; ++s) out.add_edge(g, g + s, kOne);
  return out;
}

template <Scalar T>
GainGraph<T> k4_graph(const std::vector<Quaternion<T>>& gains) {
  if (gains.size() != 6) throw std::invalid_argument("K4 needs six gains");
  GainGraph<T> g(4);
  std::size_t n = 0;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) g.add_edge(u, v, gains[n++]);
  return g;
}

template GainGraph<Rational> realize(const Template&, const std::vector<ExactQuat>&);
template GainGraph<double> realize(const Template&, const std::vector<FloatQuat>&);
template GainGraph<Rational> path_graph(const std::vector<ExactQuat>&);
template GainGraph<double> path_graph(const std::vector<FloatQuat>&);
template GainGraph<Rational> canonical_unicyclic(const std::vector<std::size_t>&, const std::vector<ExactQuat>&);
template GainGraph<double> canonical_unicyclic(const std::vector<std::size_t>&, const std::vector<FloatQuat>&);
template GainGraph<Rational> k4_graph(const std::vector<ExactQuat>&);
template GainGraph<double> k4_graph(const std::vector<FloatQuat>&);

}  // namespace qgg
