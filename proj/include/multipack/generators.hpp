#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "multipack/graph.hpp"
#include "multipack/oracle.hpp"

namespace multipack {

/// SplitMix64. All randomness in the project flows from one 64-bit seed
/// through this generator; split() derives an independent child stream by
/// seeding a new generator from the next output.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  SplitMix64 split() { return SplitMix64((*this)()); }

  /// Uniform in [0, bound), bound > 0; rejection sampling, so no modulo bias
  /// and no dependence on the standard library's distributions.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

// Named families.
Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph star_graph(Vertex leaves);
Graph complete_bipartite(Vertex a, Vertex b);
/// Triangular prism: two triangles joined by a perfect matching.
Graph prism_graph();
/// Rooted spider H2(k1, k2) with head 0; legs 0-(1+2i)-(2+2i), then leaves.
Graph spider_graph(std::uint32_t k1, std::uint32_t k2);

/// Uniform labelled tree via a random Prüfer sequence.
Graph random_tree(Vertex n, SplitMix64& rng);
/// Random tree plus each remaining pair as an edge with probability
/// num/den; always connected.
Graph random_connected_graph(Vertex n, std::uint64_t num, std::uint64_t den, SplitMix64& rng);
/// Connected chordal graph: each new vertex joins a random clique that
/// contains a random earlier vertex, so the reverse insertion order is a
/// perfect elimination ordering.
Graph random_chordal_graph(Vertex n, SplitMix64& rng);

/// Every rooted unlabelled tree on n vertices, one representative each, as
/// parent arrays in preorder (vertex 0 is the root).
std::vector<std::vector<Vertex>> all_rooted_trees(Vertex n);
/// Every free (unrooted) tree on n vertices, one representative each.
std::vector<Graph> all_free_trees(Vertex n);

/// Random hitting-set instance on n elements: each of the m sets draws its
/// size uniformly from 1..min(n, max_set_size), then a uniform subset of that
/// size. max_set_size = 0 means no cap.
HittingSetInstance random_hitting_set(std::uint32_t n, std::uint32_t m, std::uint32_t k, SplitMix64& rng,
                                      std::uint32_t max_set_size = 0);

}  // namespace multipack
