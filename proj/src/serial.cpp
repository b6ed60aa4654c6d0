#include "multipack/serial.hpp"

#include <algorithm>
#include <bit>

#include "multipack/oracle.hpp"

namespace multipack::serial {

DistanceMatrix all_pairs(const Graph& g) {
  DistanceMatrix d(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    auto dist = bfs_distances(g, s);
    std::copy(dist.begin(), dist.end(), d.row(s).begin());
  }
  return d;
}

HalfInteger hyperbolicity(const DistanceMatrix& d) {
  const Vertex n = d.order();
  std::uint32_t best = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (Vertex x = v + 1; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          std::uint32_t sums[3] = {d.at(u, v) + d.at(x, y), d.at(u, x) + d.at(v, y), d.at(u, y) + d.at(v, x)};
          std::sort(sums, sums + 3);
          best = std::max(best, sums[2] - sums[1]);
        }
      }
    }
  }
  return HalfInteger::from_twice(best);
}

VertexMask best_multipacking(const DistanceMatrix& d, std::span<const VertexMask> family) {
  VertexMask best = 0;
  for (VertexMask m : family) {
    if (!is_multipacking(d, m)) continue;
    const int pm = std::popcount(m), pb = std::popcount(best);
    if (pm > pb) {
      best = m;
    } else if (pm == pb && m != best) {
      // Equal sizes: compare ascending member lists.
      auto a = VertexSet::from_mask(m), b = VertexSet::from_mask(best);
      if (a < b) best = m;
    }
  }
  return best;
}

}  // namespace multipack::serial
