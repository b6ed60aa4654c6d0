#include "multipack/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "multipack/rooted_tree.hpp"

namespace multipack {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("vertex set has a repeated member");
  }
}

VertexSet VertexSet::from_mask(VertexMask mask) {
  VertexSet s;
  s.members_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    s.members_.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

VertexMask VertexSet::to_mask() const {
  VertexMask mask = 0;
  for (Vertex v : members_) {
    if (v >= kMaskCapacity) {
      throw CapExceeded("vertex id " + std::to_string(v) + " does not fit a 64-bit mask");
    }
    mask |= VertexMask{1} << v;
  }
  return mask;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " has an endpoint out of range (n = " + std::to_string(n) + ")");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = g.adj_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      Vertex a = std::min(v, *dup), b = std::max(v, *dup);
      throw std::invalid_argument("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool DistanceMatrix::connected() const {
  return std::find(dist_.begin(), dist_.end(), n_) == dist_.end();
}

namespace {

void bfs_fill(const Graph& g, Vertex source, std::span<std::uint32_t> dist,
              std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), g.order());
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == g.order()) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) {
    throw std::out_of_range("BFS source " + std::to_string(source) + " out of range");
  }
  std::vector<std::uint32_t> dist(g.order());
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  bfs_fill(g, source, dist, queue);
  return dist;
}

DistanceMatrix all_pairs(const Graph& g) {
  const Vertex n = g.order();
  DistanceMatrix d(n);
  const auto count = static_cast<std::int64_t>(n);
#if defined(MULTIPACK_HAVE_OPENMP)
#pragma omp parallel if (n >= 64)
#endif
  {
    std::vector<Vertex> queue;
    queue.reserve(n);
#if defined(MULTIPACK_HAVE_OPENMP)
#pragma omp for schedule(dynamic, 8)
#endif
    for (std::int64_t s = 0; s < count; ++s) {
      bfs_fill(g, static_cast<Vertex>(s), d.row(static_cast<Vertex>(s)), queue);
    }
  }
  return d;
}

std::vector<std::uint32_t> eccentricities(const Graph& g, const DistanceMatrix& d) {
  std::vector<std::uint32_t> ecc(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (std::uint32_t x : d.row(v)) {
      if (x == d.inf()) throw DisconnectedGraph("eccentricity is undefined on a disconnected graph");
      ecc[v] = std::max(ecc[v], x);
    }
  }
  return ecc;
}

RadiusDiameter radius_diameter(const Graph& g, const DistanceMatrix& d) {
  if (g.order() == 0) throw std::invalid_argument("radius of the empty graph is undefined");
  if (!d.connected()) throw DisconnectedGraph("radius is undefined on a disconnected graph");
  auto ecc = eccentricities(g, d);
  auto [lo, hi] = std::minmax_element(ecc.begin(), ecc.end());
  return {*lo, *hi};
}

VertexSet ball(const DistanceMatrix& d, Vertex v, std::uint32_t r) {
  std::vector<Vertex> members;
  auto row = d.row(v);
  for (Vertex u = 0; u < d.order(); ++u) {
    if (row[u] != d.inf() && row[u] <= r) members.push_back(u);
  }
  return VertexSet(std::move(members));
}

RootedTree bfs_tree(const Graph& g, Vertex root) {
  if (root >= g.order()) throw std::out_of_range("BFS tree root out of range");
  std::vector<Vertex> parent(g.order(), kNoVertex);
  std::vector<bool> seen(g.order(), false);
  std::queue<Vertex> queue;
  seen[root] = true;
  queue.push(root);
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        ++reached;
        queue.push(w);
      }
    }
  }
  if (reached != g.order()) throw DisconnectedGraph("BFS tree needs a connected graph");
  return RootedTree::from_parents(std::move(parent));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.order(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (local[w] != kNoVertex && local[w] > i) edges.emplace_back(static_cast<Vertex>(i), local[w]);
    }
  }
  return Graph::from_edges(static_cast<Vertex>(vertices.size()), edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const Vertex shift = a.order();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

}  // namespace multipack
