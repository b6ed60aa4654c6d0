#pragma once
// Independent reference implementations used only by the tests. None of them
// call into the library's distance, checker or solver code; they work from
// the edge list alone, trading speed for obviousness.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "multipack/graph.hpp"

namespace testing_support {

using multipack::Graph;
using multipack::Vertex;

using Matrix = std::vector<std::vector<std::uint32_t>>;

/// Floyd–Warshall on the edge list. Unreachable pairs hold `n`.
inline Matrix floyd_warshall(const Graph& g) {
  const std::uint32_t n = g.order();
  const std::uint32_t inf = 4 * n + 4;
  Matrix d(n, std::vector<std::uint32_t>(n, inf));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = n;
  return d;
}

/// Straight from the definition: every ball N_r[v], r = 1..n, holds at most
/// r members.
inline bool definitional_multipacking(const Graph& g, const std::vector<Vertex>& m) {
  const auto d = floyd_warshall(g);
  const std::uint32_t n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t r = 1; r <= n; ++r) {
      std::uint32_t inside = 0;
      for (Vertex x : m) inside += d[v][x] <= r && d[v][x] < n;
      if (inside > r) return false;
    }
  }
  return true;
}

inline std::vector<Vertex> bits(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

/// Maximum multipacking size by trying every subset.
inline std::size_t naive_mp(const Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
    const auto m = bits(mask);
    if (m.size() > best && definitional_multipacking(g, m)) best = m.size();
  }
  return best;
}

/// Does some vertex subset of size >= 4 induce a cycle? (n <= ~12)
inline bool has_induced_long_cycle(const Graph& g) {
  const std::uint32_t n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto s = bits(mask);
    if (s.size() < 4) continue;
    bool all_two = true;
    for (Vertex v : s) {
      int deg = 0;
      for (Vertex w : s) deg += g.adjacent(v, w);
      if (deg != 2) {
        all_two = false;
        break;
      }
    }
    if (!all_two) continue;
    // 2-regular: it is a cycle iff connected.
    std::vector<Vertex> stack{s[0]}, seen{s[0]};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : s) {
        if (g.adjacent(v, w) && std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          stack.push_back(w);
        }
      }
    }
    if (seen.size() == s.size()) return true;
  }
  return false;
}

inline bool has_claw(const Graph& g) {
  const std::uint32_t n = g.order();
  for (Vertex c = 0; c < n; ++c)
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex e = b + 1; e < n; ++e) {
          if (!g.adjacent(c, a) || !g.adjacent(c, b) || !g.adjacent(c, e)) continue;
          if (!g.adjacent(a, b) && !g.adjacent(a, e) && !g.adjacent(b, e)) return true;
        }
  return false;
}

/// Tries every 2-colouring.
inline bool two_colourable(const Graph& g) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok &= ((mask >> u) & 1) != ((mask >> v) & 1);
    if (ok) return true;
  }
  return false;
}

/// Twice the four-point hyperbolicity, over all ordered quadruples.
inline std::uint32_t naive_twice_delta(const Graph& g) {
  const auto d = floyd_warshall(g);
  const std::uint32_t n = g.order();
  std::uint32_t best = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex c = 0; c < n; ++c)
        for (Vertex e = 0; e < n; ++e) {
          std::uint32_t s[3] = {d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]};
          std::sort(s, s + 3);
          best = std::max(best, s[2] - s[1]);
        }
  return best;
}

}  // namespace testing_support
