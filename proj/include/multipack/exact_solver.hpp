#pragma once

#include <span>
#include <vector>

#include "multipack/graph.hpp"
#include "multipack/rooted_tree.hpp"

namespace multipack {

/// Largest connected component the tree-based solvers accept.
inline constexpr Vertex kMaxComponentOrder = kMaskCapacity;

/// Deduplicated family of vertex sets, canonical order (size, then
/// lexicographic). Members are stored as masks over tree vertex ids.
struct CandidateFamily {
  std::vector<VertexMask> sets;
  std::size_t source_tree_size = 0;

  std::size_t size() const { return sets.size(); }
  bool contains(const VertexSet& s) const;
  std::vector<VertexSet> to_vertex_sets() const;
};

/// Per-call counters for the candidate-family recursion. Each branch checks
/// its size recurrence locally and counts violations.
struct FamilyStats {
  std::size_t calls = 0;
  std::size_t base_empty = 0;
  std::size_t base_star = 0;
  std::size_t branch_leaf_pair = 0;   // parent is H1(k), k >= 2
  std::size_t branch_short_leg = 0;   // grandparent is H2(1,0)
  std::size_t branch_spider = 0;      // grandparent is a general H2
  std::size_t recurrence_violations = 0;
};

/// Every multipacking of an H1 gadget: the empty set and all singletons.
CandidateFamily enumerate_h1(const Gadget& gadget);
/// Every multipacking of an H2 gadget: the empty set, all singletons, and the
/// pairs {b, c}, {b_i, b_j} and {a_i, b_j} with i != j.
CandidateFamily enumerate_h2(const Gadget& gadget);

/// Superset of all multipackings of t built by the branch-on-deepest-vertex
/// recursion with H1/H2 gadget bases. Tree ids must be below 64.
CandidateFamily candidate_family(const RootedTree& t, FamilyStats* stats = nullptr);

/// The plain recursion: for a deepest w with parent y, either w is taken and
/// T_y is dropped, or w is deleted.
CandidateFamily fibonacci_family(const RootedTree& t);

struct SolveResult {
  VertexSet witness;
  /// Total candidates examined across components (0 for brute force).
  std::size_t family_size = 0;

  std::size_t size() const { return witness.size(); }
};

/// Best multipacking of d in `family`: largest, then lexicographically
/// smallest. Filtering runs in parallel with a deterministic reduction.
VertexMask best_multipacking(const DistanceMatrix& d, std::span<const VertexMask> family);

SolveResult max_multipacking_158(const Graph& g);
SolveResult max_multipacking_162(const Graph& g);

}  // namespace multipack
