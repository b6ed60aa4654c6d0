#pragma once

#include <optional>
#include <vector>

#include "multipack/graph.hpp"

namespace multipack {

inline constexpr Vertex kBruteForceCap = 22;
inline constexpr Vertex kBroadcastCap = 12;
inline constexpr Vertex kHittingSetCap = 25;

/// Universe 0..n-1, a family of nonempty subsets, and a target size.
struct HittingSetInstance {
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint32_t>> family;
  std::uint32_t k = 0;

  /// Throws std::invalid_argument on an empty member, an element out of
  /// range, or k < 2.
  void validate() const;
};

/// Per-vertex broadcast power.
struct Broadcast {
  std::vector<std::uint32_t> power;

  std::uint32_t cost() const;
  bool operator==(const Broadcast&) const = default;
};

struct DualityReport {
  std::size_t mp = 0;
  std::uint32_t gamma_b = 0;
  VertexSet mp_witness;
  Broadcast broadcast_witness;
  bool bound_2mp3_ok = false;
  /// Present only when the graph is chordal.
  std::optional<bool> bound_chordal_ok;
};

/// |N_r[v] ∩ M| <= r for every vertex v and every r >= 1.
bool is_multipacking(const Graph& g, const DistanceMatrix& d, const VertexSet& m);
/// Same check on a mask; requires d.order() <= 64.
bool is_multipacking(const DistanceMatrix& d, VertexMask m);

/// Maximum multipacking by scanning subsets size by size; the witness is the
/// lexicographically smallest of maximum size.
VertexSet brute_force_mp(const Graph& g, Vertex cap = kBruteForceCap);

/// Depth-first search over multipackings in ascending id order; returns the
/// first multipacking of size k found, if any. Exhaustive, so the absence of
/// a result proves MP(g) < k.
std::optional<VertexSet> find_multipacking_of_size(const Graph& g, std::size_t k);

/// All multipackings, in canonical order.
std::vector<VertexSet> enumerate_multipackings(const Graph& g, Vertex cap = kBruteForceCap);
/// Inclusion-maximal multipackings, in canonical order.
std::vector<VertexSet> enumerate_maximal_multipackings(const Graph& g, Vertex cap = kBruteForceCap);

bool is_dominating_broadcast(const DistanceMatrix& d, const Broadcast& f);
bool is_total_dominating(const Graph& g, const VertexSet& s);
bool is_hitting_set(const HittingSetInstance& inst, const VertexSet& h);

/// Smallest total dominating set; throws on isolated vertices.
VertexSet brute_force_min_tds(const Graph& g, Vertex cap = kBruteForceCap);
/// Smallest hitting set; throws on an empty family member.
VertexSet brute_force_min_hs(const HittingSetInstance& inst, Vertex cap = kHittingSetCap);

/// Exact broadcast domination number by increasing total cost.
Broadcast brute_force_gamma_b(const Graph& g, Vertex cap = kBroadcastCap);

DualityReport duality_report(const Graph& g);

}  // namespace multipack
