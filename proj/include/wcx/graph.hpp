#pragma once

// Simple undirected graphs with a fixed vertex numbering, plus the small
// set of graph routines the wired-complex machinery needs: builtin link
// graphs, girth, automorphism groups, isomorphism testing.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wcx {

// thrown when a group enumeration would exceed its configured bound
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, first < second
  std::vector<std::vector<int>> adj;       // sorted neighbour lists

  bool has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
  }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  bool operator==(const Graph&) const = default;
};

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("make_graph: negative vertex count");
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("make_graph: loop edge");
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n) throw std::invalid_argument("make_graph: endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("make_graph: duplicate edge");
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.resize(n);
  for (auto [a, b] : g.edges) {
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  return g;
}

// Builtin names: mk16, k33, gq22, cycle:n (n >= 3).
//   mk16  - Moebius-Kantor graph, LCF [5,-5]^8 on vertices 0..15
//   k33   - complete bipartite on {0,1,2} vs {3,4,5}
//   gq22  - incidence graph of the generalized quadrangle of order (2,2):
//           points = 2-subsets of {0..5}, lines = perfect matchings of {0..5},
//           both numbered in lexicographic order, points first
inline Graph builtin_graph(const std::string& name) {
  if (name == "mk16") {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 16; ++i) es.emplace_back(i, (i + 1) % 16);
    for (int i = 0; i < 16; i += 2) es.emplace_back(i, (i + 5) % 16);
    return make_graph(16, std::move(es));
  }
  if (name == "k33") {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) es.emplace_back(i, j);
    return make_graph(6, std::move(es));
  }
  if (name == "gq22") {
    std::vector<std::pair<int, int>> points;  // lex order: (0,1),(0,2),...,(4,5)
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) points.emplace_back(a, b);
    // a matching is 3 disjoint pairs; build each as a sorted pair list
    std::vector<std::vector<std::pair<int, int>>> lines;
    for (int b1 = 1; b1 < 6; ++b1) {  // partner of 0
      std::vector<int> rest;
      for (int v = 1; v < 6; ++v)
        if (v != b1) rest.push_back(v);
      for (int j = 1; j < 4; ++j) {  // partner of rest[0]
        std::vector<std::pair<int, int>> m = {{0, b1}, {rest[0], rest[j]}};
        std::vector<int> last;
        for (int k = 1; k < 4; ++k)
          if (k != j) last.push_back(rest[k]);
        m.emplace_back(last[0], last[1]);
        std::sort(m.begin(), m.end());
        lines.push_back(std::move(m));
      }
    }
    std::sort(lines.begin(), lines.end());
    std::vector<std::pair<int, int>> es;
    for (int p = 0; p < static_cast<int>(points.size()); ++p)
      for (int l = 0; l < static_cast<int>(lines.size()); ++l)
        if (std::find(lines[l].begin(), lines[l].end(), points[p]) != lines[l].end())
          es.emplace_back(p, 15 + l);
    return make_graph(30, std::move(es));
  }
  if (name.rfind("cycle:", 0) == 0) {
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(name.substr(6), &used);
      if (used != name.size() - 6) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n < 3) throw std::invalid_argument("builtin_graph: cycle:n needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return make_graph(n, std::move(es));
  }
  throw std::invalid_argument("builtin_graph: unknown graph name '" + name + "'");
}

// Shortest cycle length; nullopt for forests. BFS from every root; a non-tree
// edge {u,v} seen from u closes a walk of length dist[u]+dist[v]+1 which always
// contains a cycle no longer than itself, and rooting at a shortest cycle's
// vertex attains the girth exactly.
inline std::optional<int> girth(const Graph& g) {
  int best = -1;
  std::vector<int> dist(g.n), parent(g.n), queue;
  for (int r = 0; r < g.n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    queue.clear();
    queue.push_back(r);
    dist[r] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : g.adj[u]) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u] && parent[v] != u) {
          int len = dist[u] + dist[v] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

using Permutation = std::vector<int>;  // image array: v -> image[v]

inline Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation r(g.size());  // apply g first, then f
  for (size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

inline Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

namespace detail {

// Order in which to map g's vertices: repeatedly take the vertex with the
// most already-placed neighbours (ties: higher degree, then lower index), so
// each step is constrained as early as possible.  Mapping in plain index
// order is hopeless for bipartite graphs whose low-numbered side is an
// independent set - nothing prunes until the other side appears.
inline std::vector<int> constrained_order(const Graph& g) {
  std::vector<int> order;
  std::vector<int> placed_nb(g.n, 0);
  std::vector<char> placed(g.n, 0);
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    for (int v = 0; v < g.n; ++v) {
      if (placed[v]) continue;
      if (best == -1 || placed_nb[v] > placed_nb[best] ||
          (placed_nb[v] == placed_nb[best] && g.degree(v) > g.degree(best)))
        best = v;
    }
    order.push_back(best);
    placed[best] = 1;
    for (int u : g.adj[best])
      if (!placed[u]) ++placed_nb[u];
  }
  return order;
}

// map vertices of g onto h one at a time along `order`, image candidates
// ascending; adjacency with every already-mapped vertex must match exactly
template <class Emit>
bool iso_backtrack(const Graph& g, const Graph& h, const std::vector<int>& order,
                   std::vector<int>& img, std::vector<char>& used, int step,
                   Emit&& emit) {
  if (step == g.n) return emit(img);
  int v = order[step];
  for (int w = 0; w < h.n; ++w) {
    if (used[w] || g.degree(v) != h.degree(w)) continue;
    bool ok = true;
    for (int s = 0; s < step && ok; ++s)
      if (g.has_edge(order[s], v) != h.has_edge(img[order[s]], w)) ok = false;
    if (!ok) continue;
    img[v] = w;
    used[w] = 1;
    if (iso_backtrack(g, h, order, img, used, step + 1, emit)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace detail

// Full automorphism group, lexicographically ordered by image array with the
// identity first. Throws capacity_error beyond max_count elements.
inline std::vector<Permutation> automorphisms(const Graph& g,
                                              size_t max_count = 1000000) {
  std::vector<Permutation> group;
  std::vector<int> img(g.n);
  std::vector<char> used(g.n, 0);
  auto order = detail::constrained_order(g);
  detail::iso_backtrack(g, g, order, img, used, 0, [&](const std::vector<int>& im) {
    if (group.size() >= max_count)
      throw capacity_error("automorphisms: group larger than configured bound");
    group.push_back(im);
    return false;  // keep enumerating
  });
  // the search visits vertices in constraint order, so sort afterwards; the
  // identity is automatically lex-least (any other automorphism exceeds it at
  // the first position where they differ)
  std::sort(group.begin(), group.end());
  return group;
}

inline std::optional<Permutation> graphs_isomorphic(const Graph& g, const Graph& h) {
  if (g.n != h.n || g.edges.size() != h.edges.size()) return std::nullopt;
  std::vector<int> dg(g.n), dh(h.n);
  for (int v = 0; v < g.n; ++v) dg[v] = g.degree(v);
  for (int v = 0; v < h.n; ++v) dh[v] = h.degree(v);
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  std::vector<int> img(g.n);
  std::vector<char> used(g.n, 0);
  auto order = detail::constrained_order(g);
  std::optional<Permutation> found;
  detail::iso_backtrack(g, h, order, img, used, 0, [&](const std::vector<int>& im) {
    found = im;
    return true;  // first witness suffices
  });
  if (found) {  // confirm the witness really is an edge bijection
    for (auto [a, b] : g.edges)
      if (!h.has_edge((*found)[a], (*found)[b]))
        throw std::logic_error("graphs_isomorphic: witness failed verification");
  }
  return found;
}

}  // namespace wcx
