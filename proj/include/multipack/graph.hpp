#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace multipack {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Bit i set means vertex i is a member. Only valid for ids below 64.
using VertexMask = std::uint64_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);
inline constexpr Vertex kMaskCapacity = 64;

/// Raised by operations that are only defined on connected graphs.
class DisconnectedGraph : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exhaustive routine is asked to run above its size cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A finite set of vertex ids, stored as a strictly increasing list.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  /// Sorts the input; duplicate ids are rejected.
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet from_mask(VertexMask mask);
  VertexMask to_mask() const;

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  /// Lexicographic comparison of the member lists.
  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

/// Canonical family order: smaller sets first, then lexicographic.
bool canonical_less(const VertexSet& a, const VertexSet& b);

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n) : adj_(n) {}

  /// Throws std::invalid_argument naming the offending self-loop, duplicate
  /// edge or out-of-range endpoint.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);
  static Graph from_edges(Vertex n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  Vertex order() const { return static_cast<Vertex>(adj_.size()); }
  std::size_t size() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Hop distances between all pairs. Unreachable pairs hold inf() == n.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(Vertex n)
      : n_(n), dist_(static_cast<std::size_t>(n) * n, n) {}

  Vertex order() const { return n_; }
  std::uint32_t inf() const { return n_; }
  std::uint32_t at(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const std::uint32_t> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_, n_};
  }
  std::span<std::uint32_t> row(Vertex u) {
    return {dist_.data() + static_cast<std::size_t>(u) * n_, n_};
  }
  bool connected() const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  Vertex n_ = 0;
  std::vector<std::uint32_t> dist_;
};

struct RadiusDiameter {
  std::uint32_t radius = 0;
  std::uint32_t diameter = 0;
};

class RootedTree;

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

/// One BFS per source; rows are filled in parallel when OpenMP is enabled.
DistanceMatrix all_pairs(const Graph& g);

std::vector<std::uint32_t> eccentricities(const Graph& g, const DistanceMatrix& d);
RadiusDiameter radius_diameter(const Graph& g, const DistanceMatrix& d);

/// Closed ball N_r[v].
VertexSet ball(const DistanceMatrix& d, Vertex v, std::uint32_t r);

/// BFS spanning tree; neighbours are explored in ascending id order.
RootedTree bfs_tree(const Graph& g, Vertex root);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced by `vertices` (ascending); vertex vertices[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph complement(const Graph& g);
/// Vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace multipack
