#include "multipack/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "multipack/oracle.hpp"

namespace multipack {

namespace {

using Family = std::vector<VertexMask>;

VertexMask bit(Vertex v) {
  if (v >= kMaskCapacity) {
    throw CapExceeded("tree vertex id " + std::to_string(v) + " does not fit a 64-bit mask");
  }
  return VertexMask{1} << v;
}

void dedup(Family& f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
}

Family with_vertex(Vertex w, Family f) {
  const VertexMask b = bit(w);
  for (auto& s : f) s |= b;
  return f;
}

Family unite(Family a, const Family& b) {
  a.insert(a.end(), b.begin(), b.end());
  dedup(a);
  return a;
}

Family cross(const Family& a, const Family& b) {
  Family out;
  out.reserve(a.size() * b.size());
  for (VertexMask x : a) {
    for (VertexMask y : b) out.push_back(x | y);
  }
  dedup(out);
  return out;
}

// Lexicographic order of equal-size sets: the smaller set owns the smallest
// element of the symmetric difference.
bool lex_less_same_size(VertexMask a, VertexMask b) {
  const VertexMask diff = a ^ b;
  return diff != 0 && (a & diff & -diff) != 0;
}

bool canonical_mask_less(VertexMask a, VertexMask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return lex_less_same_size(a, b);
}

// True when a is strictly preferred as a witness: larger, then lex smaller.
bool preferred(VertexMask a, VertexMask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa > pb;
  return lex_less_same_size(a, b);
}

CandidateFamily finish(Family sets, const RootedTree& t) {
  std::sort(sets.begin(), sets.end(), canonical_mask_less);
  return CandidateFamily{std::move(sets), t.size()};
}

Family h1_sets(const Gadget& g) {
  if (g.shape.kind != GadgetKind::H1 || g.leaves.size() != g.shape.k) {
    throw std::invalid_argument("enumerate_h1 needs an H1 gadget");
  }
  Family out{0, bit(g.head)};
  for (Vertex u : g.leaves) out.push_back(bit(u));
  return out;
}

Family h2_sets(const Gadget& g) {
  if (g.shape.kind != GadgetKind::H2 || g.a.size() != g.shape.k1 || g.b.size() != g.shape.k1 ||
      g.leaves.size() != g.shape.k2) {
    throw std::invalid_argument("enumerate_h2 needs an H2 gadget");
  }
  Family out{0, bit(g.head)};
  for (Vertex v : g.a) out.push_back(bit(v));
  for (Vertex v : g.b) out.push_back(bit(v));
  for (Vertex v : g.leaves) out.push_back(bit(v));
  const std::size_t k1 = g.a.size();
  for (std::size_t i = 0; i < k1; ++i) {
    for (Vertex c : g.leaves) out.push_back(bit(g.b[i]) | bit(c));
    for (std::size_t j = 0; j < k1; ++j) {
      if (i == j) continue;
      if (i < j) out.push_back(bit(g.b[i]) | bit(g.b[j]));
      out.push_back(bit(g.a[i]) | bit(g.b[j]));
    }
  }
  return out;
}

struct Recursion {
  FamilyStats* stats;

  void check(bool ok) {
    if (!ok && stats) ++stats->recurrence_violations;
  }

  // Branches (a) and (b): either w is in the set, and everything within the
  // removed subtree is excluded, or w is deleted.
  Family branch_on(const RootedTree& t, Vertex w, Vertex cut) {
    auto without_cut = remove_subtree(t, cut);
    auto without_w = remove_leaf(t, w);
    check(t.size() - without_cut.size() >= 3 && without_w.size() + 1 == t.size());
    auto taken = with_vertex(w, run(without_cut));
    auto skipped = run(without_w);
    const std::size_t bound = taken.size() + skipped.size();
    auto out = unite(std::move(taken), skipped);
    check(out.size() <= bound);
    return out;
  }

  Family run(const RootedTree& t) {
    if (stats) ++stats->calls;
    if (t.empty()) {
      if (stats) ++stats->base_empty;
      return {0};
    }
    if (t.height() <= 1) {
      if (stats) ++stats->base_star;
      return h1_sets(extract_gadget(t, t.root()));
    }
    const auto deepest = deepest_vertices(t);
    for (Vertex w : deepest) {
      auto shape = classify_subtree(t, t.parent(w));
      if (shape.kind == GadgetKind::H1 && shape.k >= 2) {
        if (stats) ++stats->branch_leaf_pair;
        return branch_on(t, w, t.parent(w));
      }
    }
    for (Vertex w : deepest) {
      const Vertex w2 = t.parent(t.parent(w));
      if (classify_subtree(t, w2) == GadgetShape::h2(1, 0)) {
        if (stats) ++stats->branch_short_leg;
        return branch_on(t, w, w2);
      }
    }
    // Every deepest vertex now hangs off a general H2 gadget; use the
    // smallest one.
    const Vertex w2 = t.parent(t.parent(deepest.front()));
    auto gadget = extract_gadget(t, w2);
    if (gadget.shape.kind != GadgetKind::H2) {
      throw std::logic_error("grandparent of a deepest vertex is not an H2 gadget");
    }
    if (stats) ++stats->branch_spider;
    auto local = h2_sets(gadget);
    const auto m = gadget.shape.order();
    check(m >= 4 && static_cast<double>(local.size()) <= std::pow(1.58, m));
    auto rest = run(remove_subtree(t, w2));
    auto out = cross(rest, local);
    check(out.size() <= rest.size() * local.size());
    return out;
  }
};

Family fibonacci_sets(const RootedTree& t) {
  if (t.empty()) return {0};
  if (t.size() == 1) return {0, bit(t.root())};
  const Vertex w = deepest_vertices(t).front();
  const Vertex y = t.parent(w);
  auto taken = with_vertex(w, fibonacci_sets(remove_subtree(t, y)));
  return unite(std::move(taken), fibonacci_sets(remove_leaf(t, w)));
}

template <class FamilyFn>
SolveResult solve_by_components(const Graph& g, FamilyFn&& family_of) {
  SolveResult result;
  std::vector<Vertex> members;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() > kMaxComponentOrder) {
      throw CapExceeded("component of " + std::to_string(comp.size()) + " vertices exceeds the solver limit of " +
                        std::to_string(kMaxComponentOrder));
    }
    const Graph local = induced_subgraph(g, comp);
    const auto d = all_pairs(local);
    // Relabelling keeps order, so local vertex 0 is the smallest id.
    const CandidateFamily family = family_of(bfs_tree(local, 0));
    result.family_size += family.size();
    for (VertexMask rest = best_multipacking(d, family.sets); rest != 0; rest &= rest - 1) {
      members.push_back(comp[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
  }
  result.witness = VertexSet(std::move(members));
  return result;
}

}  // namespace

bool CandidateFamily::contains(const VertexSet& s) const {
  const VertexMask m = s.to_mask();
  return std::find(sets.begin(), sets.end(), m) != sets.end();
}

std::vector<VertexSet> CandidateFamily::to_vertex_sets() const {
  std::vector<VertexSet> out;
  out.reserve(sets.size());
  for (VertexMask m : sets) out.push_back(VertexSet::from_mask(m));
  return out;
}

CandidateFamily enumerate_h1(const Gadget& gadget) {
  auto sets = h1_sets(gadget);
  dedup(sets);
  std::sort(sets.begin(), sets.end(), canonical_mask_less);
  return CandidateFamily{std::move(sets), gadget.shape.order()};
}

CandidateFamily enumerate_h2(const Gadget& gadget) {
  auto sets = h2_sets(gadget);
  dedup(sets);
  std::sort(sets.begin(), sets.end(), canonical_mask_less);
  return CandidateFamily{std::move(sets), gadget.shape.order()};
}

CandidateFamily candidate_family(const RootedTree& t, FamilyStats* stats) {
  Recursion rec{stats};
  return finish(rec.run(t), t);
}

CandidateFamily fibonacci_family(const RootedTree& t) { return finish(fibonacci_sets(t), t); }

VertexMask best_multipacking(const DistanceMatrix& d, std::span<const VertexMask> family) {
  if (d.order() > kMaskCapacity) throw CapExceeded("distance matrix too large for mask filtering");
  VertexMask best = 0;
  const auto count = static_cast<std::int64_t>(family.size());
#if defined(MULTIPACK_HAVE_OPENMP)
#pragma omp parallel if (count >= 4096)
#endif
  {
    VertexMask local = 0;
#if defined(MULTIPACK_HAVE_OPENMP)
#pragma omp for schedule(static) nowait
#endif
    for (std::int64_t i = 0; i < count; ++i) {
      const VertexMask m = family[static_cast<std::size_t>(i)];
      if (preferred(m, local) && is_multipacking(d, m)) local = m;
    }
#if defined(MULTIPACK_HAVE_OPENMP)
#pragma omp critical(multipack_best_reduce)
#endif
    {
      if (preferred(local, best)) best = local;
    }
  }
  return best;
}

SolveResult max_multipacking_158(const Graph& g) {
  return solve_by_components(g, [](const RootedTree& t) { return candidate_family(t); });
}

SolveResult max_multipacking_162(const Graph& g) {
  return solve_by_components(g, [](const RootedTree& t) { return fibonacci_family(t); });
}

}  // namespace multipack
