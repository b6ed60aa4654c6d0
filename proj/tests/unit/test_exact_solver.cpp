#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "multipack/exact_solver.hpp"
#include "multipack/generators.hpp"
#include "multipack/oracle.hpp"

using namespace multipack;

namespace {

RootedTree spider(std::uint32_t k1, std::uint32_t k2) { return RootedTree::from_tree_graph(spider_graph(k1, k2), 0); }

std::size_t h2_size(std::size_t k1, std::size_t k2) {
  const std::size_t m = 2 * k1 + k2 + 1;
  return 1 + m + k1 * k2 + k1 * (k1 - 1) / 2 + k1 * (k1 - 1);
}

}  // namespace

TEST_CASE("H1 enumeration") {
  for (std::uint32_t k = 0; k <= 10; ++k) {
    const auto t = RootedTree::from_tree_graph(star_graph(k), 0);
    const auto fam = enumerate_h1(extract_gadget(t, 0));
    CHECK(fam.size() == k + 2);
    CHECK(fam.sets.front() == 0);
  }
  CHECK_THROWS_AS(enumerate_h1(extract_gadget(spider(1, 0), 0)), std::invalid_argument);
}

TEST_CASE("H2 enumeration") {
  CHECK(enumerate_h2(extract_gadget(spider(1, 0), 0)).size() == 4);
  CHECK(enumerate_h2(extract_gadget(spider(2, 1), 0)).size() == 12);
  CHECK_THROWS_AS(enumerate_h2(extract_gadget(RootedTree::from_tree_graph(star_graph(2), 0), 0)),
                  std::invalid_argument);

  for (std::uint32_t k1 = 1; k1 <= 4; ++k1) {
    for (std::uint32_t k2 = 0; k2 <= 4; ++k2) {
      const Graph g = spider_graph(k1, k2);
      const auto fam = enumerate_h2(extract_gadget(spider(k1, k2), 0));
      const auto brute = enumerate_multipackings(g);
      CAPTURE(k1);
      CAPTURE(k2);
      CHECK(fam.size() == h2_size(k1, k2));
      CHECK(fam.to_vertex_sets() == brute);
      const std::uint64_t m = 2 * k1 + k2 + 1;
      if (m >= 4) {
        CHECK(8 * fam.size() <= 3 * m * m - 4 * m + 17);
        CHECK(static_cast<double>(fam.size()) <= std::pow(1.58, static_cast<double>(m)));
      }
    }
  }
}

TEST_CASE("candidate family examples") {
  const auto p3 = RootedTree::from_tree_graph(path_graph(3), 0);
  FamilyStats stats;
  const auto fam = candidate_family(p3, &stats);
  CHECK(fam.to_vertex_sets() == std::vector<VertexSet>{VertexSet{}, VertexSet{0}, VertexSet{1}, VertexSet{2}});
  CHECK(stats.branch_short_leg == 1);

  CHECK(candidate_family(RootedTree::from_tree_graph(star_graph(5), 0)).size() == 7);
  CHECK(candidate_family(RootedTree()).size() == 1);

  FamilyStats spider_stats;
  const auto s = candidate_family(spider(2, 1), &spider_stats);
  CHECK(s.size() == 12);
  CHECK(spider_stats.branch_spider == 1);
  CHECK(s.sets == enumerate_h2(extract_gadget(spider(2, 1), 0)).sets);
}

TEST_CASE("candidate family contains every multipacking of every small tree") {
  for (Vertex n = 1; n <= 9; ++n) {
    for (const auto& parents : all_rooted_trees(n)) {
      const auto t = RootedTree::from_parents(parents);
      FamilyStats stats;
      const auto fam = candidate_family(t, &stats);
      CHECK(stats.recurrence_violations == 0);
      CHECK(std::is_sorted(fam.sets.begin(), fam.sets.end(), [](VertexMask a, VertexMask b) {
        return canonical_less(VertexSet::from_mask(a), VertexSet::from_mask(b));
      }));
      for (const auto& m : enumerate_multipackings(t.to_graph())) CHECK(fam.contains(m));
      const auto fib = fibonacci_family(t);
      for (const auto& m : enumerate_multipackings(t.to_graph())) CHECK(fib.contains(m));
    }
  }
}

TEST_CASE("solvers on named graphs") {
  CHECK(max_multipacking_158(path_graph(4)).size() == 2);
  CHECK(max_multipacking_158(path_graph(4)).witness == VertexSet{0, 3});
  CHECK(max_multipacking_158(cycle_graph(4)).size() == 1);
  CHECK(max_multipacking_158(Graph(1)).size() == 1);
  CHECK(max_multipacking_162(path_graph(4)).size() == 2);
  CHECK(max_multipacking_162(star_graph(4)).size() == 1);
  // Components are solved independently.
  const Graph two = disjoint_union(path_graph(4), cycle_graph(5));
  CHECK(max_multipacking_158(two).size() == 3);
  CHECK(max_multipacking_158(Graph(0)).size() == 0);
  CHECK_THROWS_AS(max_multipacking_158(path_graph(65)), CapExceeded);
}

TEST_CASE("solvers agree with brute force, witness included") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<Vertex>(rng.between(1, 10));
    const Graph g = random_connected_graph(n, rng.between(1, 3), 6, rng);
    const auto brute = brute_force_mp(g);
    const auto a = max_multipacking_158(g), b = max_multipacking_162(g);
    CHECK(a.witness == brute);
    CHECK(b.witness == brute);
  }
}
