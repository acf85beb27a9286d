#include "qgg/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

namespace qgg {

// ---- SimpleGraph --------------------------------------------------------------

void SimpleGraph::check(Vertex v) const {
  if (v >= adj_.size())
    throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range for order " +
                           std::to_string(adj_.size()));
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw InvalidGraph("loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw InvalidGraph("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edges_;
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<Vertex>& SimpleGraph::neighbors(Vertex v) const {
  check(v);
  return adj_[v];
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (v > u) out.emplace_back(u, v);
  return out;
}

// ---- GainGraph ----------------------------------------------------------------

template <Scalar T>
void GainGraph<T>::insert_arc(Vertex from, Vertex to, const Q& gain) {
  auto& list = arcs_[from];
  auto it = std::lower_bound(list.begin(), list.end(), to,
                             [](const Arc& a, Vertex x) { return a.to < x; });
  list.insert(it, Arc{to, gain});
}

template <Scalar T>
void GainGraph<T>::add_edge_unchecked(Vertex u, Vertex v, const Q& gain) {
  base_.add_edge(u, v);
  insert_arc(u, v, gain);
  insert_arc(v, u, conj(gain));
}

template <Scalar T>
void GainGraph<T>::add_edge(Vertex u, Vertex v, const Q& gain) {
  if (!is_unit(gain))
    throw InvalidGraph("gain on edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " is not a unit quaternion");
  add_edge_unchecked(u, v, gain);
}

template <Scalar T>
const Quaternion<T>& GainGraph<T>::gain(Vertex u, Vertex v) const {
  if (u >= order() || v >= order())
    throw VertexOutOfRange("vertex out of range in gain query");
  const auto& list = arcs_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Arc& a, Vertex x) { return a.to < x; });
  if (it == list.end() || it->to != v)
    throw InvalidGraph(std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  return it->gain;
}

template <Scalar T>
std::vector<Edge<T>> GainGraph<T>::edges() const {
  std::vector<Edge<T>> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u)
    for (const Arc& a : arcs_[u])
      if (a.to > u) out.push_back(Edge<T>{u, a.to, a.gain});
  return out;
}

template <Scalar T>
GainGraph<T> with_unit_gains(const SimpleGraph& g) {
  GainGraph<T> out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge_unchecked(u, v, Quaternion<T>::one());
  return out;
}

template <Scalar T>
GainGraph<double> to_float_graph(const GainGraph<T>& g) {
  GainGraph<double> out(g.order());
  for (const auto& e : g.edges()) out.add_edge_unchecked(e.u, e.v, to_float(e.gain));
  return out;
}

template <Scalar T>
QMatrix<T> adjacency_matrix(const GainGraph<T>& g) {
  QMatrix<T> a(g.order(), g.order());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = e.gain;
    a(e.v, e.u) = conj(e.gain);
  }
  return a;
}

// ---- cycles -------------------------------------------------------------------

GirthResult girth(const SimpleGraph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  GirthResult best;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kNone);
    dist[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (best.girth && 2 * dist[u] + 1 >= *best.girth) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u] && dist[w] >= dist[u]) {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (!best.girth || len < *best.girth) {
            best.girth = len;
            std::vector<Vertex> left;
            for (Vertex x = u; x != root; x = parent[x]) left.push_back(x);
            left.push_back(root);
            std::reverse(left.begin(), left.end());
            std::vector<Vertex> right;
            for (Vertex x = w; x != root; x = parent[x]) right.push_back(x);
            left.insert(left.end(), right.begin(), right.end());
            best.cycle = std::move(left);
          }
        }
      }
    }
  }
  return best;
}

void validate_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) throw NotACycle("a cycle needs at least three vertices");
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw NotACycle("cycle repeats a vertex");
  for (std::size_t n = 0; n < cycle.size(); ++n) {
    const Vertex a = cycle[n];
    const Vertex b = cycle[(n + 1) % cycle.size()];
    if (a >= g.order() || b >= g.order()) throw VertexOutOfRange("cycle vertex out of range");
    if (!g.has_edge(a, b))
      throw NotACycle(std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
  }
}

template <Scalar T>
Quaternion<T> cycle_gain(const GainGraph<T>& g, const std::vector<Vertex>& cycle) {
  validate_cycle(g.underlying(), cycle);
  Quaternion<T> phi = Quaternion<T>::one();
  for (std::size_t n = 0; n < cycle.size(); ++n)
    phi = phi * g.gain(cycle[n], cycle[(n + 1) % cycle.size()]);
  return phi;
}

std::string to_string(CycleType t) {
  switch (t) {
    case CycleType::Type1: return "Type1";
    case CycleType::Type2: return "Type2";
    case CycleType::Type3: return "Type3";
    case CycleType::Type4: return "Type4";
  }
  return "?";
}

bool type_matches_parity(std::size_t length, CycleType type) {
  const bool even = length % 2 == 0;
  return even == (type == CycleType::Type1 || type == CycleType::Type2);
}

namespace {

int sign_power(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

template <Scalar T>
CycleClassification classify_cycle_gain(std::size_t length, const Quaternion<T>& phi) {
  CycleClassification out{};
  out.approximate = !ScalarTraits<T>::exact;
  if (length % 2 == 0) {
    const int s = sign_power(length / 2);
    if constexpr (ScalarTraits<T>::exact) {
      const bool one = phi == ExactQuat(Rational(s));
      out.type = one ? CycleType::Type1 : CycleType::Type2;
      out.margin = max_coeff_distance(to_float(phi), FloatQuat(static_cast<double>(s)));
    } else {
      out.margin = max_coeff_distance(phi, FloatQuat(static_cast<double>(s)));
      out.type = out.margin < kTypeTolerance ? CycleType::Type1 : CycleType::Type2;
    }
  } else {
    const int s = sign_power((length - 1) / 2);
    if constexpr (ScalarTraits<T>::exact) {
      out.type = sgn(phi[0]) == 0 ? CycleType::Type4 : CycleType::Type3;
      out.margin = std::abs(s * phi[0].get_d());
    } else {
      out.margin = std::abs(s * phi[0]);
      out.type = out.margin < kTypeTolerance ? CycleType::Type4 : CycleType::Type3;
    }
  }
  return out;
}

template <Scalar T>
CycleType decide_cycle_type(const GainGraph<T>& g, const std::vector<Vertex>& cycle) {
  const CycleClassification c = classify_cycle(g, cycle);
  if (c.approximate && c.margin >= kTypeTolerance && c.margin <= kRefuseBand)
    throw AmbiguousType("cycle type undecidable in floating point (margin " +
                        std::to_string(c.margin) + ")");
  return c.type;
}

ExactQuat type_target_gain(std::size_t length, CycleType type) {
  if (length < 3 || !type_matches_parity(length, type))
    throw std::invalid_argument(to_string(type) + " is not available for a cycle of length " +
                                std::to_string(length));
  const Rational s(length % 2 == 0 ? sign_power(length / 2) : sign_power((length - 1) / 2));
  switch (type) {
    case CycleType::Type1:
    case CycleType::Type3: return ExactQuat(s);
    case CycleType::Type2:
    case CycleType::Type4: return ExactQuat(0, s, 0, 0);
  }
  return {};
}

std::vector<std::vector<Vertex>> simple_cycles(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> out;
  const std::size_t n = g.order();
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex u) {
    for (Vertex w : g.neighbors(u)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        out.push_back(path);
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(w);
        dfs(start, w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
  return out;
}

// ---- switching ----------------------------------------------------------------

template <Scalar T>
GainGraph<T> apply_switching(const GainGraph<T>& g, const SwitchingFunction<T>& xi) {
  if (xi.xi.size() != g.order())
    throw InvalidGraph("switching function must cover every vertex");
  for (const auto& q : xi.xi)
    if (!is_unit(q)) throw InvalidGraph("switching values must be unit quaternions");
  GainGraph<T> out(g.order());
  for (const auto& e : g.edges())
    out.add_edge_unchecked(e.u, e.v, inverse(xi.xi[e.u]) * e.gain * xi.xi[e.v]);
  return out;
}

template <Scalar T>
Normalized<T> normalize_by_spanning_tree(const GainGraph<T>& g, Vertex root) {
  const std::size_t n = g.order();
  if (n == 0) return {g, {}, {}};
  if (root >= n) throw VertexOutOfRange("root out of range");
  std::vector<char> seen(n, 0);
  SwitchingFunction<T> xi{std::vector<Quaternion<T>>(n, Quaternion<T>::one())};
  std::vector<std::pair<Vertex, Vertex>> tree;
  std::deque<Vertex> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      xi.xi[w] = g.gain(w, u) * xi.xi[u];
      tree.emplace_back(std::min(u, w), std::max(u, w));
      queue.push_back(w);
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw DisconnectedGraph("spanning-tree normalization needs a connected graph");
  GainGraph<T> out = apply_switching(g, xi);
  std::sort(tree.begin(), tree.end());
  return {std::move(out), std::move(xi), std::move(tree)};
}

// ---- subgraphs ----------------------------------------------------------------

template <Scalar T>
Subgraph<T> induced_subgraph(const GainGraph<T>& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> origin = keep;
  std::sort(origin.begin(), origin.end());
  origin.erase(std::unique(origin.begin(), origin.end()), origin.end());
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(g.order(), kNone);
  for (std::size_t n = 0; n < origin.size(); ++n) {
    if (origin[n] >= g.order()) throw VertexOutOfRange("vertex out of range in subgraph");
    index[origin[n]] = n;
  }
  GainGraph<T> out(origin.size());
  for (const auto& e : g.edges())
    if (index[e.u] != kNone && index[e.v] != kNone)
      out.add_edge_unchecked(index[e.u], index[e.v], e.gain);
  return {std::move(out), std::move(origin)};
}

template <Scalar T>
Subgraph<T> delete_vertices(const GainGraph<T>& g, const std::vector<Vertex>& drop) {
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : drop) {
    if (v >= g.order()) throw VertexOutOfRange("vertex out of range in deletion");
    gone[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

bool is_dominating_set(const SimpleGraph& g, const std::vector<Vertex>& s) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) {
    if (v >= g.order()) throw VertexOutOfRange("vertex out of range in dominating-set query");
    in[v] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    const auto& nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w] != 0; })) return false;
  }
  return true;
}

std::vector<Vertex> shortest_path(const SimpleGraph& g, Vertex from, Vertex to) {
  const std::size_t n = g.order();
  if (from >= n || to >= n) throw VertexOutOfRange("vertex out of range in path query");
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(n, kNone);
  parent[from] = from;
  std::deque<Vertex> queue{from};
  while (!queue.empty() && parent[to] == kNone) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u))
      if (parent[w] == kNone) {
        parent[w] = u;
        queue.push_back(w);
      }
  }
  if (parent[to] == kNone) return {};
  std::vector<Vertex> path;
  for (Vertex x = to; x != from; x = parent[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// Backtracking matcher; stops after the first hit unless `all` is set.
void match(const SimpleGraph& p, const SimpleGraph& t, std::vector<Vertex>& map,
           std::vector<char>& used, std::size_t next, bool all,
           std::vector<std::vector<Vertex>>& out) {
  if (next == p.order()) {
    out.push_back(map);
    return;
  }
  for (Vertex c = 0; c < t.order(); ++c) {
    if (used[c] || t.degree(c) != p.degree(next)) continue;
    bool ok = true;
    for (Vertex prev = 0; prev < next && ok; ++prev)
      ok = p.has_edge(prev, next) == t.has_edge(map[prev], c);
    if (!ok) continue;
    map[next] = c;
    used[c] = 1;
    match(p, t, map, used, next + 1, all, out);
    used[c] = 0;
    if (!all && !out.empty()) return;
  }
}

std::vector<std::vector<Vertex>> run_match(const SimpleGraph& p, const SimpleGraph& t, bool all) {
  std::vector<std::vector<Vertex>> out;
  if (p.order() != t.order() || p.size() != t.size()) return out;
  std::vector<std::size_t> dp, dt;
  for (Vertex v = 0; v < p.order(); ++v) dp.push_back(p.degree(v));
  for (Vertex v = 0; v < t.order(); ++v) dt.push_back(t.degree(v));
  std::sort(dp.begin(), dp.end());
  std::sort(dt.begin(), dt.end());
  if (dp != dt) return out;
  std::vector<Vertex> map(p.order());
  std::vector<char> used(t.order(), 0);
  match(p, t, map, used, 0, all, out);
  return out;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& pattern,
                                                    const SimpleGraph& target) {
  auto found = run_match(pattern, target, false);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<std::vector<Vertex>> all_isomorphisms(const SimpleGraph& pattern,
                                                  const SimpleGraph& target) {
  return run_match(pattern, target, true);
}

// ---- instantiations -------------------------------------------------------------

#define QGG_INSTANTIATE(T)                                                                  \
  template class GainGraph<T>;                                                              \
  template GainGraph<T> with_unit_gains<T>(const SimpleGraph&);                             \
  template GainGraph<double> to_float_graph(const GainGraph<T>&);                           \
  template QMatrix<T> adjacency_matrix(const GainGraph<T>&);                                \
  template Quaternion<T> cycle_gain(const GainGraph<T>&, const std::vector<Vertex>&);       \
  template CycleClassification classify_cycle_gain(std::size_t, const Quaternion<T>&);      \
  template CycleType decide_cycle_type(const GainGraph<T>&, const std::vector<Vertex>&);    \
  template GainGraph<T> apply_switching(const GainGraph<T>&, const SwitchingFunction<T>&);  \
  template Normalized<T> normalize_by_spanning_tree(const GainGraph<T>&, Vertex);           \
  template Subgraph<T> induced_subgraph(const GainGraph<T>&, const std::vector<Vertex>&);   \
  template Subgraph<T> delete_vertices(const GainGraph<T>&, const std::vector<Vertex>&);

QGG_INSTANTIATE(Rational)
QGG_INSTANTIATE(double)

#undef QGG_INSTANTIATE

}  // namespace qgg
