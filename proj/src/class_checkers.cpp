#include "multipack/class_checkers.hpp"

#include <algorithm>

namespace multipack {

std::string HalfInteger::to_string() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::vector<Vertex> lex_bfs(const Graph& g) {
  const Vertex n = g.order();
  std::vector<std::vector<Vertex>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex step = 0; step < n; ++step) {
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best == kNoVertex || label[v] > label[best]) best = v;
    }
    visited[best] = true;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!visited[w]) label[w].push_back(n - step);
    }
  }
  return order;
}

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order) {
  const Vertex n = g.order();
  if (order.size() != n) return false;
  std::vector<Vertex> position(n, kNoVertex);
  for (Vertex i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != kNoVertex) return false;
    position[order[i]] = i;
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) later.push_back(w);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (!g.adjacent(later[i], later[j])) return false;
      }
    }
  }
  return true;
}

bool is_chordless_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len < 4) return false;
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

namespace {

// Shortest x-y path avoiding N[v] except x and y; with v prepended this is a
// chordless cycle because v sees only x and y and a shortest path is induced.
std::vector<Vertex> cycle_through(const Graph& g, Vertex v, Vertex x, Vertex y) {
  const Vertex n = g.order();
  std::vector<bool> blocked(n, false);
  blocked[v] = true;
  for (Vertex w : g.neighbors(v)) blocked[w] = (w != x && w != y);
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<Vertex> queue{x};
  blocked[x] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (u == y) break;
    for (Vertex w : g.neighbors(u)) {
      if (!blocked[w]) {
        blocked[w] = true;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (parent[y] == kNoVertex) return {};
  std::vector<Vertex> path;
  for (Vertex u = y; u != kNoVertex; u = parent[u]) path.push_back(u);
  path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;  // v, x, ..., y
}

std::vector<Vertex> find_chordless_cycle(const Graph& g, std::span<const Vertex> first_tries) {
  auto try_vertex = [&](Vertex v) -> std::vector<Vertex> {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        auto cycle = cycle_through(g, v, nb[i], nb[j]);
        if (!cycle.empty()) return cycle;
      }
    }
    return {};
  };
  for (Vertex v : first_tries) {
    auto c = try_vertex(v);
    if (!c.empty()) return c;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    auto c = try_vertex(v);
    if (!c.empty()) return c;
  }
  return {};
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  auto visit = lex_bfs(g);
  std::vector<Vertex> peo(visit.rbegin(), visit.rend());
  ChordalityResult result;
  if (is_perfect_elimination_order(g, peo)) {
    result.chordal = true;
    result.elimination_order = std::move(peo);
    return result;
  }
  result.chordless_cycle = find_chordless_cycle(g, peo);
  if (result.chordless_cycle.empty()) throw std::logic_error("no PEO but no chordless cycle found");
  return result;
}

BipartitionResult is_bipartite(const Graph& g) {
  const Vertex n = g.order();
  BipartitionResult result;
  std::vector<std::uint8_t> side(n, 2);
  std::vector<Vertex> parent(n, kNoVertex);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != 2) continue;
    side[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == 2) {
          side[w] = side[u] ^ 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          // Tree paths to the common ancestor plus the edge u-w form an odd cycle.
          std::vector<Vertex> pu, pw;
          for (Vertex x = u; x != kNoVertex; x = parent[x]) pu.push_back(x);
          for (Vertex x = w; x != kNoVertex; x = parent[x]) pw.push_back(x);
          while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
            pu.pop_back();
            pw.pop_back();
          }
          pw.pop_back();
          result.odd_cycle = pu;
          result.odd_cycle.insert(result.odd_cycle.end(), pw.rbegin(), pw.rend());
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  result.side = std::move(side);
  return result;
}

ClawResult is_clawfree(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
            return {false, std::array<Vertex, 4>{c, nb[i], nb[j], nb[k]}};
          }
        }
      }
    }
  }
  return {};
}

std::optional<std::size_t> regularity(const Graph& g) {
  if (g.order() == 0) return 0;
  const std::size_t deg = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != deg) return std::nullopt;
  }
  return deg;
}

HalfInteger hyperbolicity(const Graph& g, const DistanceMatrix& d) {
  const Vertex n = g.order();
  if (!d.connected()) throw DisconnectedGraph("hyperbolicity needs a connected graph");
  if (n < 4) return {};
  std::uint32_t best = 0;
  const auto count = static_cast<std::int64_t>(n);
#if defined(MULTIPACK_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 1) reduction(max : best) if (n >= 24)
#endif
  for (std::int64_t ui = 0; ui < count; ++ui) {
    const auto u = static_cast<Vertex>(ui);
    auto du = d.row(u);
    for (Vertex v = u + 1; v < n; ++v) {
      auto dv = d.row(v);
      for (Vertex x = v + 1; x < n; ++x) {
        auto dx = d.row(x);
        for (Vertex y = x + 1; y < n; ++y) {
          std::uint32_t s1 = du[v] + dx[y];
          std::uint32_t s2 = du[x] + dv[y];
          std::uint32_t s3 = du[y] + dv[x];
          if (s1 < s2) std::swap(s1, s2);
          if (s2 < s3) std::swap(s2, s3);
          if (s1 < s2) std::swap(s1, s2);
          best = std::max(best, s1 - s2);
        }
      }
    }
  }
  return HalfInteger::from_twice(best);
}

}  // namespace multipack
