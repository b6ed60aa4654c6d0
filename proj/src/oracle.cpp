#include "multipack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "multipack/class_checkers.hpp"

namespace multipack {

namespace {

void require_cap(Vertex n, Vertex cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(cap));
  }
}

// With the member distances from v sorted ascending as d_1 <= d_2 <= ...,
// |N_r[v] ∩ M| <= r for all r >= 1 is equivalent to d_i >= i for all i >= 2.
bool sorted_distances_ok(std::span<std::uint32_t> dist) {
  std::sort(dist.begin(), dist.end());
  for (std::size_t i = 1; i < dist.size(); ++i) {
    if (dist[i] < i + 1) return false;
  }
  return true;
}

// Calls visit(indices) for every k-subset of 0..n-1 in lexicographic order
// until visit returns true.
template <class Visit>
bool for_each_combination(Vertex n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<Vertex> idx(k);
  std::iota(idx.begin(), idx.end(), Vertex{0});
  while (true) {
    if (visit(std::span<const Vertex>(idx))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

VertexMask to_mask(std::span<const Vertex> idx) {
  VertexMask m = 0;
  for (Vertex v : idx) m |= VertexMask{1} << v;
  return m;
}

std::vector<VertexMask> neighbourhood_masks(const Graph& g) {
  std::vector<VertexMask> out(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) out[v] |= VertexMask{1} << w;
  }
  return out;
}

}  // namespace

void HittingSetInstance::validate() const {
  if (k < 2) throw std::invalid_argument("hitting set target k must be at least 2");
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (family[j].empty()) throw std::invalid_argument("family member " + std::to_string(j) + " is empty");
    auto sorted = family[j];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("family member " + std::to_string(j) + " repeats an element");
    }
    for (auto e : family[j]) {
      if (e >= n) {
        throw std::invalid_argument("element " + std::to_string(e) + " of family member " + std::to_string(j) +
                                    " is outside the universe");
      }
    }
  }
}

std::uint32_t Broadcast::cost() const { return std::accumulate(power.begin(), power.end(), std::uint32_t{0}); }

bool is_multipacking(const Graph& g, const DistanceMatrix& d, const VertexSet& m) {
  for (Vertex x : m) {
    if (x >= g.order()) throw std::out_of_range("multipacking member out of range");
  }
  std::vector<std::uint32_t> dist(m.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto row = d.row(v);
    for (std::size_t i = 0; i < m.size(); ++i) dist[i] = row[m[i]];
    if (!sorted_distances_ok(dist)) return false;
  }
  return true;
}

bool is_multipacking(const DistanceMatrix& d, VertexMask m) {
  const auto size = static_cast<std::size_t>(std::popcount(m));
  if (size <= 1) return true;
  std::uint32_t dist[kMaskCapacity];
  for (Vertex v = 0; v < d.order(); ++v) {
    auto row = d.row(v);
    std::size_t i = 0;
    for (VertexMask rest = m; rest != 0; rest &= rest - 1) dist[i++] = row[std::countr_zero(rest)];
    if (!sorted_distances_ok(std::span<std::uint32_t>(dist, size))) return false;
  }
  return true;
}

VertexSet brute_force_mp(const Graph& g, Vertex cap) {
  const Vertex n = g.order();
  require_cap(n, cap, "brute-force multipacking");
  if (n == 0) return {};
  const auto d = all_pairs(g);
  std::size_t upper = n;
  if (n >= 2 && d.connected()) upper = radius_diameter(g, d).radius;
  for (std::size_t s = upper; s >= 1; --s) {
    VertexMask found = 0;
    bool hit = for_each_combination(n, s, [&](std::span<const Vertex> idx) {
      VertexMask m = to_mask(idx);
      if (!is_multipacking(d, m)) return false;
      found = m;
      return true;
    });
    if (hit) return VertexSet::from_mask(found);
  }
  return {};
}

std::optional<VertexSet> find_multipacking_of_size(const Graph& g, std::size_t k) {
  const auto d = all_pairs(g);
  std::vector<Vertex> current;
  std::vector<std::uint32_t> scratch;

  auto still_valid = [&]() {
    scratch.resize(current.size());
    for (Vertex v = 0; v < g.order(); ++v) {
      auto row = d.row(v);
      for (std::size_t i = 0; i < current.size(); ++i) scratch[i] = row[current[i]];
      if (!sorted_distances_ok(scratch)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, Vertex start) -> bool {
    if (current.size() == k) return true;
    for (Vertex v = start; v < g.order(); ++v) {
      if (g.order() - v < k - current.size()) return false;
      current.push_back(v);
      if (still_valid() && self(self, v + 1)) return true;
      current.pop_back();
    }
    return false;
  };

  if (search(search, 0)) return VertexSet(current);
  return std::nullopt;
}

std::vector<VertexSet> enumerate_multipackings(const Graph& g, Vertex cap) {
  require_cap(g.order(), cap, "multipacking enumeration");
  const auto d = all_pairs(g);
  std::vector<VertexSet> out;
  const VertexMask end = VertexMask{1} << g.order();
  for (VertexMask m = 0; m < end; ++m) {
    if (is_multipacking(d, m)) out.push_back(VertexSet::from_mask(m));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<VertexSet> enumerate_maximal_multipackings(const Graph& g, Vertex cap) {
  require_cap(g.order(), cap, "multipacking enumeration");
  const auto d = all_pairs(g);
  const VertexMask all = g.order() == 0 ? 0 : (~VertexMask{0} >> (kMaskCapacity - g.order()));
  std::vector<VertexSet> out;
  for (const auto& s : enumerate_multipackings(g, cap)) {
    const VertexMask m = s.to_mask();
    bool maximal = true;
    for (VertexMask rest = all & ~m; rest != 0 && maximal; rest &= rest - 1) {
      if (is_multipacking(d, m | (rest & -rest))) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

bool is_dominating_broadcast(const DistanceMatrix& d, const Broadcast& f) {
  for (Vertex u = 0; u < d.order(); ++u) {
    bool heard = false;
    for (Vertex v = 0; v < d.order() && !heard; ++v) {
      heard = f.power[v] >= 1 && d.at(u, v) != d.inf() && d.at(u, v) <= f.power[v];
    }
    if (!heard) return false;
  }
  return true;
}

bool is_total_dominating(const Graph& g, const VertexSet& s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    bool hit = std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return s.contains(w); });
    if (!hit) return false;
  }
  return true;
}

bool is_hitting_set(const HittingSetInstance& inst, const VertexSet& h) {
  return std::all_of(inst.family.begin(), inst.family.end(), [&](const auto& set) {
    return std::any_of(set.begin(), set.end(), [&](std::uint32_t e) { return h.contains(e); });
  });
}

VertexSet brute_force_min_tds(const Graph& g, Vertex cap) {
  require_cap(g.order(), cap, "total dominating set search");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " is isolated; no total dominating set exists");
    }
  }
  const auto nb = neighbourhood_masks(g);
  for (std::size_t s = 0; s <= g.order(); ++s) {
    VertexMask found = 0;
    bool hit = for_each_combination(g.order(), s, [&](std::span<const Vertex> idx) {
      VertexMask m = to_mask(idx);
      for (Vertex v = 0; v < g.order(); ++v) {
        if ((nb[v] & m) == 0) return false;
      }
      found = m;
      return true;
    });
    if (hit) return VertexSet::from_mask(found);
  }
  return {};
}

VertexSet brute_force_min_hs(const HittingSetInstance& inst, Vertex cap) {
  require_cap(inst.n, cap, "hitting set search");
  std::vector<VertexMask> sets;
  for (std::size_t j = 0; j < inst.family.size(); ++j) {
    if (inst.family[j].empty()) {
      throw std::invalid_argument("family member " + std::to_string(j) + " is empty and cannot be hit");
    }
    VertexMask m = 0;
    for (auto e : inst.family[j]) {
      if (e >= inst.n) throw std::invalid_argument("family element outside the universe");
      m |= VertexMask{1} << e;
    }
    sets.push_back(m);
  }
  for (std::size_t s = 0; s <= inst.n; ++s) {
    VertexMask found = 0;
    bool hit = for_each_combination(inst.n, s, [&](std::span<const Vertex> idx) {
      VertexMask h = to_mask(idx);
      if (!std::all_of(sets.begin(), sets.end(), [&](VertexMask m) { return (m & h) != 0; })) return false;
      found = h;
      return true;
    });
    if (hit) return VertexSet::from_mask(found);
  }
  return {};
}

Broadcast brute_force_gamma_b(const Graph& g, Vertex cap) {
  const Vertex n = g.order();
  require_cap(n, cap, "broadcast domination search");
  if (n == 0) return {};
  const auto d = all_pairs(g);
  if (!d.connected()) throw DisconnectedGraph("broadcast domination search needs a connected graph");
  const std::uint32_t rad = std::max<std::uint32_t>(radius_diameter(g, d).radius, 1);
  const VertexMask all = ~VertexMask{0} >> (kMaskCapacity - n);

  // covers[v][p]: mask of N_p[v].
  std::vector<std::vector<VertexMask>> covers(n, std::vector<VertexMask>(rad + 1, 0));
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t p = 1; p <= rad; ++p) covers[v][p] = ball(d, v, p).to_mask();
  }

  Broadcast f{std::vector<std::uint32_t>(n, 0)};
  // Assigns exactly `budget` more power among vertices v.., highest power first.
  auto assign = [&](auto&& self, Vertex v, std::uint32_t budget, VertexMask covered) -> bool {
    if (budget == 0) return covered == all;
    if (v == n) return false;
    for (std::uint32_t p = std::min(budget, rad) + 1; p-- > 0;) {
      f.power[v] = p;
      if (self(self, v + 1, budget - p, covered | covers[v][p])) return true;
    }
    f.power[v] = 0;
    return false;
  };
  // An optimal dominating broadcast never costs more than the radius.
  for (std::uint32_t cost = 1; cost <= rad; ++cost) {
    if (assign(assign, 0, cost, 0)) return f;
  }
  throw std::logic_error("no dominating broadcast within the radius bound");
}

DualityReport duality_report(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("duality report needs a connected graph");
  DualityReport r;
  r.mp_witness = brute_force_mp(g);
  r.mp = r.mp_witness.size();
  r.broadcast_witness = brute_force_gamma_b(g);
  r.gamma_b = r.broadcast_witness.cost();
  r.bound_2mp3_ok = r.mp <= r.gamma_b && r.gamma_b <= 2 * r.mp + 3;
  if (is_chordal(g).chordal) r.bound_chordal_ok = 2 * r.gamma_b <= 3 * r.mp + 1;  // γ_b <= ceil(3·MP/2)
  return r;
}

}  // namespace multipack
