#include "multipack/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace multipack {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % bound;
}

Graph path_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(Vertex leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph::from_edges(a + b, edges);
}

Graph prism_graph() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph spider_graph(std::uint32_t k1, std::uint32_t k2) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k1; ++i) {
    edges.emplace_back(0, 1 + 2 * i);
    edges.emplace_back(1 + 2 * i, 2 + 2 * i);
  }
  for (Vertex i = 0; i < k2; ++i) edges.emplace_back(0, 1 + 2 * k1 + i);
  return Graph::from_edges(1 + 2 * k1 + k2, edges);
}

Graph random_tree(Vertex n, SplitMix64& rng) {
  if (n <= 1) return Graph(n);
  if (n == 2) return Graph::from_edges(2, {{0, 1}});
  std::vector<Vertex> pruefer(n - 2);
  for (auto& x : pruefer) x = static_cast<Vertex>(rng.below(n));
  std::vector<std::uint32_t> degree(n, 1);
  for (Vertex x : pruefer) ++degree[x];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  for (Vertex x : pruefer) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1) leaves.insert(x);
  }
  Vertex a = *leaves.begin();
  Vertex b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(Vertex n, std::uint64_t num, std::uint64_t den, SplitMix64& rng) {
  const Graph tree = random_tree(n, rng);
  auto edges = tree.edges();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v) && rng.chance(num, den)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_chordal_graph(Vertex n, SplitMix64& rng) {
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Edge> edges;
  auto adjacent = [&](Vertex a, Vertex b) { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); };
  for (Vertex x = 1; x < n; ++x) {
    const auto v = static_cast<Vertex>(rng.below(x));
    std::vector<Vertex> pool = adj[v];
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
    std::vector<Vertex> clique{v};
    for (Vertex u : pool) {
      if (!rng.chance(1, 2)) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return adjacent(u, c); })) clique.push_back(u);
    }
    for (Vertex c : clique) {
      adj[x].push_back(c);
      adj[c].push_back(x);
      edges.emplace_back(c, x);
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<std::vector<Vertex>> all_rooted_trees(Vertex n) {
  std::vector<std::vector<Vertex>> out;
  if (n == 0) return out;
  // Level sequences in preorder, generated in the order of Beyer and
  // Hedetniemi; each successor is obtained in constant amortised time.
  std::vector<Vertex> level(n);
  for (Vertex i = 0; i < n; ++i) level[i] = i;
  while (true) {
    std::vector<Vertex> parent(n, kNoVertex);
    for (Vertex i = 1; i < n; ++i) {
      Vertex j = i - 1;
      while (level[j] != level[i] - 1) --j;
      parent[i] = j;
    }
    out.push_back(std::move(parent));

    Vertex p = n;
    for (Vertex i = n; i-- > 1;) {
      if (level[i] > 1) {
        p = i;
        break;
      }
    }
    if (p == n) break;
    Vertex q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (Vertex i = p; i < n; ++i) level[i] = level[i - p + q];
  }
  return out;
}

namespace {

std::string ahu(const Graph& g, Vertex v, Vertex from) {
  std::vector<std::string> parts;
  for (Vertex w : g.neighbors(v)) {
    if (w != from) parts.push_back(ahu(g, w, v));
  }
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  return s + ")";
}

std::string tree_canonical_form(const Graph& g) {
  // Centres by repeatedly stripping leaves.
  const Vertex n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  Vertex remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<Vertex>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : g.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    auto s = ahu(g, c, kNoVertex);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<Graph> all_free_trees(Vertex n) {
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (const auto& parent : all_rooted_trees(n)) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(parent[v], v);
    Graph g = Graph::from_edges(n, edges);
    if (seen.insert(tree_canonical_form(g)).second) out.push_back(std::move(g));
  }
  return out;
}

HittingSetInstance random_hitting_set(std::uint32_t n, std::uint32_t m, std::uint32_t k, SplitMix64& rng,
                                      std::uint32_t max_set_size) {
  if (n == 0) throw std::invalid_argument("random hitting set needs a nonempty universe");
  const std::uint32_t cap = max_set_size == 0 ? n : std::min(n, max_set_size);
  HittingSetInstance inst{n, {}, k};
  std::vector<std::uint32_t> universe(n);
  for (std::uint32_t e = 0; e < n; ++e) universe[e] = e;
  for (std::uint32_t j = 0; j < m; ++j) {
    // Size first, then a uniform subset of that size (partial shuffle).
    const auto size = static_cast<std::uint32_t>(rng.between(1, cap));
    for (std::uint32_t i = 0; i < size; ++i) std::swap(universe[i], universe[rng.between(i, n - 1)]);
    std::vector<std::uint32_t> set(universe.begin(), universe.begin() + size);
    std::sort(set.begin(), set.end());
    inst.family.push_back(std::move(set));
  }
  return inst;
}

}  // namespace multipack
