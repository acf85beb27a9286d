#include "qgg/reduce.hpp"

#include <algorithm>
#include <numeric>

namespace qgg {

// ---- reductions ---------------------------------------------------------------

namespace {

template <Scalar T>
Subgraph<T> identity_subgraph(const GainGraph<T>& g) {
  Subgraph<T> s{g, {}};
  s.origin.resize(g.order());
  std::iota(s.origin.begin(), s.origin.end(), Vertex{0});
  return s;
}

// Deletes local vertices from s, keeping origin pointing at the original ids.
template <Scalar T>
void drop_local(Subgraph<T>& s, const std::vector<Vertex>& local) {
  Subgraph<T> next = delete_vertices(s.graph, local);
  for (auto& o : next.origin) o = s.origin[o];
  s = std::move(next);
}

template <Scalar T>
bool close_enough(const Quaternion<T>& a, const Quaternion<T>& b) {
  if constexpr (ScalarTraits<T>::exact) {
    return a == b;
  } else {
    return max_coeff_distance(a, b) < kTypeTolerance;
  }
}

}  // namespace

template <Scalar T>
PendantTrim<T> trim_pendant_pairs(const GainGraph<T>& g) {
  PendantTrim<T> out{identity_subgraph(g), 0, {}};
  for (;;) {
    const auto& cur = out.graph.graph;
    Vertex x = cur.order();
    for (Vertex v = 0; v < cur.order(); ++v)
      if (cur.degree(v) == 1) {
        x = v;
        break;
      }
    if (x == cur.order()) break;
    const Vertex y = cur.neighbors(x).front();
    out.ledger.emplace_back(out.graph.origin[x], out.graph.origin[y]);
    ++out.pairs;
    drop_local(out.graph, {x, y});
  }
  return out;
}

template <Scalar T>
Subgraph<T> remove_pendant_twins(const GainGraph<T>& g) {
  Subgraph<T> s = identity_subgraph(g);
  for (;;) {
    const auto& cur = s.graph;
    std::optional<Vertex> victim;
    for (Vertex y = 0; y < cur.order() && !victim; ++y) {
      std::vector<Vertex> leaves;
      for (Vertex w : cur.neighbors(y))
        if (cur.degree(w) == 1) leaves.push_back(w);
      if (leaves.size() >= 2) victim = leaves[1];
    }
    if (!victim) break;
    drop_local(s, {*victim});
  }
  return s;
}

template <Scalar T>
std::vector<MultiplePair<T>> find_multiple_vertices(const GainGraph<T>& g) {
  std::vector<MultiplePair<T>> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto& nx = g.neighbors(x);
    if (nx.empty()) continue;
    for (Vertex y = x + 1; y < g.order(); ++y) {
      if (g.neighbors(y) != nx) continue;
      const Quaternion<T> k = g.gain(x, nx.front()) * inverse(g.gain(y, nx.front()));
      bool ok = true;
      for (std::size_t n = 1; n < nx.size() && ok; ++n)
        ok = close_enough(g.gain(x, nx[n]), Quaternion<T>(k * g.gain(y, nx[n])));
      if (ok) out.push_back(MultiplePair<T>{x, y, k});
    }
  }
  return out;
}

template <Scalar T>
Reduction<T> reduced_graph(const GainGraph<T>& g) {
  return reduced_graph_with(g, [](const auto&) { return std::pair<std::size_t, int>{0, 1}; });
}

// ---- recognition --------------------------------------------------------------

std::string to_string(Family f) {
  switch (f) {
    case Family::Path: return "Path";
    case Family::Star: return "Star";
    case Family::Cycle: return "Cycle";
    case Family::Complete: return "Complete";
    case Family::CompleteBipartite: return "CompleteBipartite";
    case Family::CompleteTripartite: return "CompleteTripartite";
    case Family::CanonicalUnicyclic: return "CanonicalUnicyclic";
    case Family::Infinity: return "Infinity";
    case Family::Theta: return "Theta";
    case Family::Other: return "Other";
  }
  return "?";
}

std::optional<Shape> ShapeReport::as(Family f) const {
  if (family == f) return static_cast<const Shape&>(*this);
  for (const auto& a : alternatives)
    if (a.family == f) return a;
  return std::nullopt;
}

std::vector<Vertex> two_core(const SimpleGraph& g) {
  std::vector<std::size_t> deg(g.order());
  std::vector<char> gone(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (gone[v]) continue;
    gone[v] = 1;
    for (Vertex w : g.neighbors(v))
      if (!gone[w] && --deg[w] <= 1) stack.push_back(w);
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) core.push_back(v);
  return core;
}

namespace {

// Walks through degree-two vertices from `from` via `first` until a vertex
// for which stop() holds. Returns the internal vertices and the end vertex.
template <class Stop>
std::pair<std::vector<Vertex>, Vertex> walk(const SimpleGraph& g, Vertex from, Vertex first, Stop stop) {
  std::vector<Vertex> internal;
  Vertex prev = from;
  Vertex cur = first;
  while (!stop(cur)) {
    internal.push_back(cur);
    const auto& nb = g.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return {internal, cur};
}

std::optional<Shape> match_path(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n == 0 || g.size() != n - 1) return std::nullopt;
  Vertex start = n;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) <= 1 && start == n) start = v;
  }
  if (start == n) return std::nullopt;
  std::vector<Vertex> order{start};
  if (n > 1) {
    auto [internal, end] = walk(g, start, g.neighbors(start).front(),
                                [&](Vertex v) { return g.degree(v) == 1; });
    order.insert(order.end(), internal.begin(), internal.end());
    order.push_back(end);
  }
  if (order.size() != n) return std::nullopt;
  return Shape{Family::Path, {n}, {order}};
}

std::optional<Shape> match_star(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.size() != n - 1) return std::nullopt;
  for (Vertex c = 0; c < n; ++c)
    if (g.degree(c) == n - 1) {
      std::vector<Vertex> leaves;
      for (Vertex v = 0; v < n; ++v)
        if (v != c) leaves.push_back(v);
      return Shape{Family::Star, {n}, {{c}, leaves}};
    }
  return std::nullopt;
}

std::optional<Shape> match_cycle(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n < 3 || g.size() != n) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return std::nullopt;
  auto [internal, end] = walk(g, 0, g.neighbors(0).front(), [](Vertex v) { return v == 0; });
  (void)end;
  if (internal.size() + 1 != n) return std::nullopt;
  std::vector<Vertex> order{0};
  order.insert(order.end(), internal.begin(), internal.end());
  return Shape{Family::Cycle, {n}, {order}};
}

std::optional<Shape> match_complete(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n == 0 || g.size() != n * (n - 1) / 2) return std::nullopt;
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  return Shape{Family::Complete, {n}, {all}};
}

bool independent(const SimpleGraph& g, const std::vector<Vertex>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.has_edge(s[a], s[b])) return false;
  return true;
}

// Components of the complement; for a complete multipartite graph these are
// exactly the parts.
std::vector<std::vector<Vertex>> complement_components(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (Vertex w = 0; w < n; ++w)
        if (!seen[w] && w != comp[h] && !g.has_edge(comp[h], w)) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<Shape> match_multipartite(const SimpleGraph& g, std::size_t parts, Family f) {
  if (g.order() < parts) return std::nullopt;
  auto comps = complement_components(g);
  if (comps.size() != parts) return std::nullopt;
  for (const auto& c : comps)
    if (!independent(g, c)) return std::nullopt;
  Shape s{f, {}, comps};
  for (const auto& c : comps) s.params.push_back(c.size());
  return s;
}

std::optional<Shape> match_canonical_unicyclic(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n < 4 || g.size() != n) return std::nullopt;
  const auto core = two_core(g);
  if (core.size() < 3 || core.size() == n) return std::nullopt;
  std::vector<char> on(n, 0);
  for (Vertex v : core) on[v] = 1;
  std::vector<char> starred(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (on[v]) continue;
    if (g.degree(v) != 1 || !on[g.neighbors(v).front()]) return std::nullopt;
    starred[g.neighbors(v).front()] = 1;
  }
  // Core is unicyclic with minimum degree 2, hence a cycle; walk it.
  const Vertex c0 = core.front();
  auto in_core = [&](Vertex v) { return on[v] != 0; };
  Vertex first = n;
  for (Vertex w : g.neighbors(c0))
    if (in_core(w)) {
      first = w;
      break;
    }
  std::vector<Vertex> cycle{c0};
  Vertex prev = c0;
  Vertex cur = first;
  while (cur != c0) {
    cycle.push_back(cur);
    Vertex next = n;
    for (Vertex w : g.neighbors(cur))
      if (in_core(w) && w != prev) {
        next = w;
        break;
      }
    prev = cur;
    cur = next;
  }
  const std::size_t len = cycle.size();
  std::vector<std::size_t> pos;
  std::vector<Vertex> stars;
  for (std::size_t i = 0; i < len; ++i)
    if (starred[cycle[i]]) {
      pos.push_back(i);
      stars.push_back(cycle[i]);
    }
  const std::size_t t = pos.size();
  std::size_t k = 0;
  for (std::size_t i = 0; i < t; ++i) {
    const std::size_t gap = t == 1 ? len : (pos[(i + 1) % t] + len - pos[i]) % len;
    if ((gap - 1) % 2 == 0) ++k;
  }
  std::sort(stars.begin(), stars.end());
  return Shape{Family::CanonicalUnicyclic, {len, t, k}, {cycle, stars}};
}

// Infinity and theta skeletons: connected, |E| = |V| + 1, no pendant vertex.
std::optional<Shape> match_bicyclic(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n < 4 || g.size() != n + 1) return std::nullopt;
  std::vector<Vertex> branch;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return std::nullopt;
    if (g.degree(v) > 2) branch.push_back(v);
  }
  auto is_branch = [&](Vertex v) { return g.degree(v) > 2; };

  if (branch.size() == 1 && g.degree(branch[0]) == 4) {
    // infinity(p, 1, q): two cycles through x.
    const Vertex x = branch[0];
    std::vector<std::vector<Vertex>> cycles;
    std::vector<char> used(n, 0);
    for (Vertex w : g.neighbors(x)) {
      if (used[w]) continue;
      auto [internal, end] = walk(g, x, w, is_branch);
      if (end != x) return std::nullopt;
      for (Vertex v : internal) used[v] = 1;
      std::vector<Vertex> cyc{x};
      cyc.insert(cyc.end(), internal.begin(), internal.end());
      cycles.push_back(cyc);
    }
    if (cycles.size() != 2) return std::nullopt;
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return Shape{Family::Infinity,
                 {cycles[0].size(), 1, cycles[1].size()},
                 {cycles[0], {x}, cycles[1]}};
  }

  if (branch.size() != 2 || g.degree(branch[0]) != 3 || g.degree(branch[1]) != 3) return std::nullopt;
  const Vertex x = branch[0];
  const Vertex y = branch[1];
  std::vector<std::vector<Vertex>> to_y;
  std::vector<Vertex> loop_internal;
  for (Vertex w : g.neighbors(x)) {
    auto [internal, end] = walk(g, x, w, is_branch);
    if (end == y) {
      std::vector<Vertex> p{x};
      p.insert(p.end(), internal.begin(), internal.end());
      p.push_back(y);
      to_y.push_back(p);
    } else if (loop_internal.empty()) {
      loop_internal = internal;
    }
  }
  if (to_y.size() == 3) {
    std::stable_sort(to_y.begin(), to_y.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return Shape{Family::Theta,
                 {to_y[0].size() - 2, to_y[1].size() - 2, to_y[2].size() - 2},
                 to_y};
  }
  if (to_y.size() != 1) return std::nullopt;
  // infinity(p, l, q) with l >= 2: one cycle at each branch vertex.
  std::vector<Vertex> cx{x};
  cx.insert(cx.end(), loop_internal.begin(), loop_internal.end());
  std::vector<Vertex> cy{y};
  for (Vertex w : g.neighbors(y)) {
    auto [internal, end] = walk(g, y, w, is_branch);
    if (end == y) {
      cy.insert(cy.end(), internal.begin(), internal.end());
      break;
    }
  }
  std::vector<Vertex> path = to_y.front();
  if (cx.size() + cy.size() + path.size() - 2 != n) return std::nullopt;
  if (cy.size() < cx.size()) {
    std::swap(cx, cy);
    std::reverse(path.begin(), path.end());
  }
  return Shape{Family::Infinity, {cx.size(), path.size(), cy.size()}, {cx, path, cy}};
}

}  // namespace

ShapeReport recognize(const SimpleGraph& g) {
  if (g.order() == 0 || !is_connected(g)) throw DisconnectedGraph("recognize needs a connected graph");
  std::vector<Shape> found;
  auto add = [&](std::optional<Shape> s) {
    if (s) found.push_back(std::move(*s));
  };
  add(match_path(g));
  add(match_star(g));
  add(match_cycle(g));
  add(match_complete(g));
  add(match_multipartite(g, 2, Family::CompleteBipartite));
  add(match_multipartite(g, 3, Family::CompleteTripartite));
  add(match_canonical_unicyclic(g));
  auto bi = match_bicyclic(g);
  if (bi && bi->family == Family::Infinity) add(bi);
  if (bi && bi->family == Family::Theta) add(bi);
  ShapeReport rep;
  if (found.empty()) {
    rep.family = Family::Other;
    return rep;
  }
  static_cast<Shape&>(rep) = found.back();
  found.pop_back();
  rep.alternatives = std::move(found);
  return rep;
}

namespace {

bool covers_exactly(std::size_t n, const std::vector<Vertex>& vs) {
  std::vector<Vertex> s = vs;
  std::sort(s.begin(), s.end());
  if (s.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (s[i] != i) return false;
  return true;
}

bool is_walk(const SimpleGraph& g, const std::vector<Vertex>& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] >= g.order() || p[i + 1] >= g.order() || !g.has_edge(p[i], p[i + 1])) return false;
  return !p.empty();
}

bool valid_cycle(const SimpleGraph& g, const std::vector<Vertex>& c) {
  try {
    validate_cycle(g, c);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

bool full_multipartite(const SimpleGraph& g, const std::vector<std::vector<Vertex>>& parts) {
  std::vector<Vertex> all;
  for (const auto& p : parts) {
    if (p.empty() || !independent(g, p)) return false;
    all.insert(all.end(), p.begin(), p.end());
  }
  if (!covers_exactly(g.order(), all)) return false;
  std::size_t cross = 0;
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b) cross += parts[a].size() * parts[b].size();
  return g.size() == cross;
}

}  // namespace

bool validate_shape(const SimpleGraph& g, const Shape& s) {
  const std::size_t n = g.order();
  const auto& w = s.witness;
  switch (s.family) {
    case Family::Path:
      return w.size() == 1 && covers_exactly(n, w[0]) && is_walk(g, w[0]) && g.size() == n - 1 &&
             s.params == std::vector<std::size_t>{n};
    case Family::Star: {
      if (w.size() != 2 || w[0].size() != 1 || g.size() != n - 1) return false;
      std::vector<Vertex> all = w[1];
      all.push_back(w[0][0]);
      if (!covers_exactly(n, all)) return false;
      for (Vertex leaf : w[1])
        if (!g.has_edge(w[0][0], leaf)) return false;
      return s.params == std::vector<std::size_t>{n};
    }
    case Family::Cycle:
      return w.size() == 1 && covers_exactly(n, w[0]) && valid_cycle(g, w[0]) && g.size() == n &&
             s.params == std::vector<std::size_t>{n};
    case Family::Complete:
      return w.size() == 1 && covers_exactly(n, w[0]) && g.size() == n * (n - 1) / 2;
    case Family::CompleteBipartite:
    case Family::CompleteTripartite: {
      const std::size_t parts = s.family == Family::CompleteBipartite ? 2 : 3;
      if (w.size() != parts || !full_multipartite(g, w)) return false;
      for (std::size_t i = 0; i < parts; ++i)
        if (s.params.size() != parts || s.params[i] != w[i].size()) return false;
      return true;
    }
    case Family::CanonicalUnicyclic: {
      if (w.size() != 2 || !valid_cycle(g, w[0]) || g.size() != n || w[1].empty()) return false;
      std::vector<char> on(n, 0), star(n, 0), has_leaf(n, 0);
      for (Vertex v : w[0]) on[v] = 1;
      for (Vertex v : w[1]) {
        if (v >= n || !on[v]) return false;
        star[v] = 1;
      }
      for (Vertex v = 0; v < n; ++v) {
        if (on[v]) continue;
        if (g.degree(v) != 1 || !star[g.neighbors(v).front()]) return false;
        has_leaf[g.neighbors(v).front()] = 1;
      }
      for (Vertex v : w[1])
        if (!has_leaf[v]) return false;
      const auto again = match_canonical_unicyclic(g);
      return again && again->params == s.params;
    }
    case Family::Infinity: {
      if (w.size() != 3 || g.size() != n + 1) return false;
      const auto& cp = w[0];
      const auto& path = w[1];
      const auto& cq = w[2];
      if (!valid_cycle(g, cp) || !valid_cycle(g, cq) || !is_walk(g, path)) return false;
      if (path.front() != cp.front() || path.back() != cq.front()) return false;
      std::vector<Vertex> all = cp;
      all.insert(all.end(), cq.begin(), cq.end());
      if (path.size() >= 2) all.insert(all.end(), path.begin() + 1, path.end() - 1);
      if (path.size() == 1) all.erase(all.begin() + static_cast<std::ptrdiff_t>(cp.size()));
      return covers_exactly(n, all) &&
             s.params == std::vector<std::size_t>{cp.size(), path.size(), cq.size()} &&
             cp.size() <= cq.size();
    }
    case Family::Theta: {
      if (w.size() != 3 || g.size() != n + 1) return false;
      std::vector<Vertex> all{w[0].front(), w[0].back()};
      std::size_t zero_paths = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        const auto& p = w[i];
        if (p.size() < 2 || !is_walk(g, p) || p.front() != w[0].front() || p.back() != w[0].back())
          return false;
        if (p.size() == 2) ++zero_paths;
        all.insert(all.end(), p.begin() + 1, p.end() - 1);
        if (s.params.size() != 3 || s.params[i] != p.size() - 2) return false;
      }
      return zero_paths <= 1 && covers_exactly(n, all) && s.params[0] <= s.params[1] &&
             s.params[1] <= s.params[2];
    }
    case Family::Other: return true;
  }
  return false;
}

std::optional<BicyclicCore> bicyclic_core(const SimpleGraph& g) {
  if (g.order() == 0 || !is_connected(g) || g.size() != g.order() + 1) return std::nullopt;
  const auto core = two_core(g);
  // Rebuild the core on local ids.
  std::vector<std::size_t> index(g.order(), g.order());
  for (std::size_t i = 0; i < core.size(); ++i) index[core[i]] = i;
  SimpleGraph h(core.size());
  for (auto [u, v] : g.edges())
    if (index[u] < core.size() && index[v] < core.size()) h.add_edge(index[u], index[v]);
  auto s = match_bicyclic(h);
  if (!s) return std::nullopt;
  for (auto& part : s->witness)
    for (auto& v : part) v = core[v];
  return BicyclicCore{*s, core, core.size() != g.order()};
}

#define QGG_INSTANTIATE(T)                                                                   \
  template PendantTrim<T> trim_pendant_pairs(const GainGraph<T>&);                           \
  template Subgraph<T> remove_pendant_twins(const GainGraph<T>&);                            \
  template std::vector<MultiplePair<T>> find_multiple_vertices(const GainGraph<T>&);         \
  template Reduction<T> reduced_graph(const GainGraph<T>&);

QGG_INSTANTIATE(Rational)
QGG_INSTANTIATE(double)

#undef QGG_INSTANTIATE

}  // namespace qgg
