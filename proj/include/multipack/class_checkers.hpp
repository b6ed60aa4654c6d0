#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "multipack/graph.hpp"

namespace multipack {

/// Exact non-negative multiple of 1/2.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(std::uint32_t twice) { return HalfInteger(twice); }
  static constexpr HalfInteger from_int(std::uint32_t whole) { return HalfInteger(2 * whole); }

  constexpr std::uint32_t twice_value() const { return twice_; }
  double to_double() const { return twice_ / 2.0; }
  std::string to_string() const;

  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  constexpr explicit HalfInteger(std::uint32_t twice) : twice_(twice) {}
  std::uint32_t twice_ = 0;
};

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering when chordal.
  std::vector<Vertex> elimination_order;
  /// A chordless cycle of length >= 4 otherwise, in cyclic order.
  std::vector<Vertex> chordless_cycle;
};

struct BipartitionResult {
  bool bipartite = false;
  /// 0/1 side per vertex when bipartite.
  std::vector<std::uint8_t> side;
  /// Odd closed walk otherwise; the last vertex is adjacent to the first.
  std::vector<Vertex> odd_cycle;
};

struct ClawResult {
  bool claw_free = true;
  /// Center followed by three pairwise non-adjacent neighbours.
  std::optional<std::array<Vertex, 4>> claw;
};

/// Lexicographic BFS visit order starting at the smallest id of each component.
std::vector<Vertex> lex_bfs(const Graph& g);
/// True iff every vertex's later neighbours in `order` form a clique.
bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);
/// True iff `cycle` is an induced cycle of length >= 4.
bool is_chordless_cycle(const Graph& g, std::span<const Vertex> cycle);

ChordalityResult is_chordal(const Graph& g);
BipartitionResult is_bipartite(const Graph& g);
ClawResult is_clawfree(const Graph& g);
/// The common degree, or nullopt when degrees differ.
std::optional<std::size_t> regularity(const Graph& g);

/// Gromov hyperbolicity via the four-point condition over all 4-subsets.
/// Graphs with fewer than four vertices give 0.
HalfInteger hyperbolicity(const Graph& g, const DistanceMatrix& d);

}  // namespace multipack
