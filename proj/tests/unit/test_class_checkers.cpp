#include "doctest.h"
#include "multipack/class_checkers.hpp"
#include "multipack/generators.hpp"
#include "../support.hpp"

using namespace multipack;

TEST_CASE("chordality") {
  const auto c4 = is_chordal(cycle_graph(4));
  CHECK_FALSE(c4.chordal);
  CHECK(c4.chordless_cycle.size() == 4);
  CHECK(is_chordless_cycle(cycle_graph(4), c4.chordless_cycle));
  const auto k4 = is_chordal(complete_graph(4));
  CHECK(k4.chordal);
  CHECK(is_perfect_elimination_order(complete_graph(4), k4.elimination_order));
  CHECK(is_chordal(Graph(0)).chordal);
  CHECK(is_chordal(Graph(3)).chordal);
}

TEST_CASE("chordality agrees with an induced-cycle search") {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 400; ++trial) {
    const auto n = static_cast<Vertex>(rng.between(1, 8));
    const Graph g = rng.chance(1, 2) ? random_connected_graph(n, rng.between(0, 5), 6, rng)
                                     : disjoint_union(random_chordal_graph(n, rng), random_tree(3, rng));
    const auto r = is_chordal(g);
    CHECK(r.chordal == !testing_support::has_induced_long_cycle(g));
    if (r.chordal) {
      CHECK(is_perfect_elimination_order(g, r.elimination_order));
    } else {
      CHECK(is_chordless_cycle(g, r.chordless_cycle));
    }
  }
}

TEST_CASE("random chordal generator produces chordal graphs") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_chordal_graph(static_cast<Vertex>(rng.between(1, 25)), rng);
    CHECK(is_connected(g));
    CHECK(is_chordal(g).chordal);
  }
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(cycle_graph(4)).bipartite);
  const auto k3 = is_bipartite(complete_graph(3));
  CHECK_FALSE(k3.bipartite);
  CHECK(k3.odd_cycle.size() == 3);

  SplitMix64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_connected_graph(static_cast<Vertex>(rng.between(1, 10)), 1, 8, rng);
    const auto r = is_bipartite(g);
    CHECK(r.bipartite == testing_support::two_colourable(g));
    if (r.bipartite) {
      for (auto [u, v] : g.edges()) CHECK(r.side[u] != r.side[v]);
    } else {
      const auto& c = r.odd_cycle;
      CHECK(c.size() % 2 == 1);
      for (std::size_t i = 0; i < c.size(); ++i) CHECK(g.adjacent(c[i], c[(i + 1) % c.size()]));
    }
  }
}

TEST_CASE("claw-freeness") {
  const auto star = is_clawfree(star_graph(3));
  CHECK_FALSE(star.claw_free);
  REQUIRE(star.claw.has_value());
  CHECK((*star.claw)[0] == 0);
  CHECK(is_clawfree(cycle_graph(5)).claw_free);

  SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_connected_graph(static_cast<Vertex>(rng.between(1, 10)), rng.between(1, 5), 6, rng);
    const auto r = is_clawfree(g);
    CHECK(r.claw_free == !testing_support::has_claw(g));
    if (r.claw) {
      const auto [c, a, b, e] = *r.claw;
      CHECK((g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, e)));
      CHECK_FALSE((g.adjacent(a, b) || g.adjacent(a, e) || g.adjacent(b, e)));
    }
  }
}

TEST_CASE("regularity") {
  CHECK(regularity(cycle_graph(5)) == std::optional<std::size_t>{2});
  CHECK_FALSE(regularity(path_graph(3)).has_value());
  CHECK(regularity(prism_graph()) == std::optional<std::size_t>{3});
}

TEST_CASE("hyperbolicity") {
  auto delta = [](const Graph& g) { return hyperbolicity(g, all_pairs(g)); };
  CHECK(delta(cycle_graph(4)) == HalfInteger::from_int(1));
  CHECK(delta(complete_graph(5)) == HalfInteger::from_int(0));
  CHECK(delta(path_graph(3)) == HalfInteger{});
  CHECK(delta(cycle_graph(5)).to_string() == "1/2");
  CHECK(HalfInteger::from_twice(3).to_string() == "3/2");
  CHECK(HalfInteger::from_twice(2).to_string() == "1");
  CHECK_THROWS_AS(delta(Graph(4)), DisconnectedGraph);

  SplitMix64 rng(10);
  for (int trial = 0; trial < 80; ++trial) {
    const auto n = static_cast<Vertex>(rng.between(1, 12));
    const Graph tree = random_tree(n, rng);
    CHECK(delta(tree) == HalfInteger{});
    const Graph g = random_connected_graph(n, 1, 4, rng);
    CHECK(delta(g).twice_value() == testing_support::naive_twice_delta(g));
  }
}
