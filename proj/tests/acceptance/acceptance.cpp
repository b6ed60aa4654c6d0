// Acceptance suite. Each criterion prints exactly one PASS/FAIL line.
//
//   acceptance            run everything
//   acceptance 3 5b       run the named criteria only
//
// Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "multipack/class_checkers.hpp"
#include "multipack/exact_solver.hpp"
#include "multipack/generators.hpp"
#include "multipack/oracle.hpp"
#include "multipack/path_counting.hpp"
#include "multipack/reductions.hpp"

using namespace multipack;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// The connected graphs shared by criteria 1(b) and 9.
std::vector<Graph> random_connected_sample() {
  SplitMix64 rng(kSeed);
  std::vector<Graph> out;
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<Vertex>(rng.between(2, 10));
    out.push_back(random_connected_graph(n, rng.between(1, 5), 6, rng));
  }
  return out;
}

std::vector<Graph> random_chordal_sample(std::size_t count, std::uint64_t salt) {
  SplitMix64 rng(kSeed ^ salt);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_chordal_graph(static_cast<Vertex>(rng.between(2, 10)), rng));
  return out;
}

std::vector<RootedTree> rooted_catalog(Vertex max_n) {
  std::vector<RootedTree> out;
  for (Vertex n = 1; n <= max_n; ++n) {
    for (auto& p : all_rooted_trees(n)) out.push_back(RootedTree::from_parents(std::move(p)));
  }
  return out;
}

// ---- 1 --------------------------------------------------------------------

Outcome solver_oracle_equivalence() {
  std::size_t trees = 0, graphs = 0, mismatches = 0;
  auto compare = [&](const Graph& g) {
    const auto brute = brute_force_mp(g).size();
    mismatches += max_multipacking_158(g).size() != brute;
    mismatches += max_multipacking_162(g).size() != brute;
  };
  for (const auto& t : rooted_catalog(9)) {
    compare(t.to_graph());
    ++trees;
  }
  for (const auto& g : random_connected_sample()) {
    compare(g);
    ++graphs;
  }
  return {mismatches == 0, fmt("%zu trees (n<=9), %zu random graphs (2<=n<=10), %zu mismatches", trees, graphs, mismatches)};
}

// ---- 2 --------------------------------------------------------------------

Outcome superset_property() {
  std::size_t checked = 0, violations = 0;
  auto check = [&](const RootedTree& t) {
    const auto fam = candidate_family(t);
    for (const auto& m : enumerate_multipackings(t.to_graph())) violations += !fam.contains(m);
    ++checked;
  };
  for (const auto& t : rooted_catalog(9)) check(t);
  SplitMix64 rng(kSeed + 2);
  for (int i = 0; i < 200; ++i) check(bfs_tree(random_tree(static_cast<Vertex>(rng.between(1, 16)), rng), 0));
  return {violations == 0, fmt("%zu trees, %zu multipackings missing from the family", checked, violations)};
}

// ---- 3 --------------------------------------------------------------------

Outcome family_growth() {
  SplitMix64 root(kSeed + 3);
  double worst = 0;
  Vertex worst_n = 0;
  bool separated = false;
  std::size_t sep_158 = 0, sep_162 = 0;
  for (Vertex n = 16; n <= 28; ++n) {
    SplitMix64 rng = root.split();
    for (int i = 0; i < 50; ++i) {
      const auto t = bfs_tree(random_tree(n, rng), 0);
      const auto size = candidate_family(t).size();
      const double growth = std::pow(static_cast<double>(size), 1.0 / n);
      if (growth > worst) {
        worst = growth;
        worst_n = n;
      }
      if (!separated) {
        const auto fib = fibonacci_family(t).size();
        if (fib > size) {
          separated = true;
          sep_158 = size;
          sep_162 = fib;
        }
      }
    }
  }
  return {worst <= 1.58 && separated,
          fmt("max |family|^(1/n) = %.5f at n=%u over 650 trees; 1.62 family %zu > 1.58 family %zu", worst, worst_n,
              sep_162, sep_158)};
}

// ---- 4 --------------------------------------------------------------------

Outcome gadget_counts() {
  std::size_t bad = 0, cases = 0;
  for (std::uint32_t k = 0; k <= 10; ++k) {
    const auto t = RootedTree::from_tree_graph(star_graph(k), 0);
    bad += enumerate_h1(extract_gadget(t, 0)).size() != k + 2;
    ++cases;
  }
  // H2(0, k2) is the star H1(k2), already covered above.
  for (std::uint32_t k1 = 1; k1 <= 4; ++k1) {
    for (std::uint32_t k2 = 0; k2 <= 4; ++k2) {
      const Graph g = spider_graph(k1, k2);
      const auto fam = enumerate_h2(extract_gadget(RootedTree::from_tree_graph(g, 0), 0));
      bad += fam.to_vertex_sets() != enumerate_multipackings(g);
      const std::uint64_t m = 2 * k1 + k2 + 1;
      if (m >= 4) bad += 8 * fam.size() > 3 * m * m - 4 * m + 17;
      ++cases;
    }
  }
  return {bad == 0, fmt("%zu gadgets, %zu failures", cases, bad)};
}

// ---- 5 --------------------------------------------------------------------

Outcome path_counts_exact() {
  const auto all = count_all_path(20), maximal = count_maximal_path(20);
  std::size_t bad = 0;
  const int first[] = {2, 3, 4, 6, 9};
  for (std::size_t n = 1; n <= 5; ++n) bad += all.at(n) != first[n - 1];
  for (Vertex n = 1; n <= 20; ++n) {
    const Graph p = path_graph(n);
    bad += all.at(n) != enumerate_multipackings(p).size();
    bad += maximal.at(n) != enumerate_maximal_multipackings(p).size();
  }
  return {bad == 0, fmt("n=1..20, both kinds, %zu mismatches; c(1..5) = 2,3,4,6,9", bad)};
}

Outcome path_counts_growth() {
  // Read literally: c(n) <= lambda^n for every n <= 40.
  const auto all = count_all_path(40), maximal = count_maximal_path(40);
  std::vector<std::string> broken;
  std::size_t all_bad = 0, max_bad = 0;
  for (std::size_t n = 1; n <= 40; ++n) {
    const double a = all.at(n).convert_to<double>(), m = maximal.at(n).convert_to<double>();
    if (a > std::pow(1.46557, n)) {
      if (all_bad++ == 0) broken.push_back(fmt("all(%zu)=%.0f > 1.46557^%zu", n, a, n));
    }
    if (m > std::pow(1.3248, n)) {
      if (max_bad++ == 0) broken.push_back(fmt("maximal(%zu)=%.0f > 1.3248^%zu", n, m, n));
    }
  }
  const double ratio_all = all.at(40).convert_to<double>() / all.at(39).convert_to<double>();
  const double ratio_max = maximal.at(40).convert_to<double>() / maximal.at(39).convert_to<double>();
  std::string detail = fmt("violations: all %zu/40, maximal %zu/40", all_bad, max_bad);
  for (const auto& b : broken) detail += "; first " + b;
  detail += fmt("; c(40)/c(39) = %.5f and %.5f", ratio_all, ratio_max);
  return {all_bad == 0 && max_bad == 0, detail};
}

// ---- 6 and 7 --------------------------------------------------------------

const ReductionVariant kHsVariants[] = {ReductionVariant::HsChordal, ReductionVariant::HsHalfHyperbolic,
                                        ReductionVariant::HsBipartite, ReductionVariant::HsClawFree};

// Every (n, m, k) with n, m <= 5 and minimum_k <= k <= min(4, n), each
// repeated with fresh random families until the variant has 300 instances.
// Rounds alternate between unrestricted sets and sets of size at most one or
// two; without the small sets almost every instance is a yes-instance.
std::vector<HittingSetInstance> hs_sweep(ReductionVariant v) {
  struct Shape {
    std::uint32_t n, m, k;
  };
  std::vector<Shape> shapes;
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (std::uint32_t m = 1; m <= 5; ++m)
      for (std::uint32_t k = minimum_k(v); k <= std::min<std::uint32_t>(4, n); ++k) shapes.push_back({n, m, k});
  SplitMix64 rng(kSeed + 6 + static_cast<std::uint64_t>(v));
  std::vector<HittingSetInstance> out;
  for (std::uint32_t round = 0; round < 12 || out.size() < 300; ++round) {
    const std::uint32_t cap = round % 3;  // 0 = unrestricted
    for (const auto& s : shapes) out.push_back(random_hitting_set(s.n, s.m, s.k, rng, cap));
  }
  return out;
}

Outcome reduction_round_trips() {
  std::string detail;
  bool ok = true;
  for (auto v : kHsVariants) {
    std::size_t bad = 0, yes = 0;
    std::set<std::uint32_t> bad_k;
    const auto sweep = hs_sweep(v);
    for (const auto& inst : sweep) {
      const auto out = reduce_hs(inst, v);
      const bool hs = brute_force_min_hs(inst).size() <= inst.k;
      const bool mp = find_multipacking_of_size(out.graph, inst.k).has_value();
      bad += hs != mp;
      yes += hs;
      if (hs != mp) bad_k.insert(inst.k);
    }
    ok &= bad == 0;
    detail += fmt("%s %zu (%zu yes) %zu bad", variant_name(v).c_str(), sweep.size(), yes, bad);
    if (!bad_k.empty()) {
      detail += " at k in {";
      for (auto k : bad_k) detail += std::to_string(k) + (k == *bad_k.rbegin() ? "}" : ",");
    }
    detail += "; ";
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

std::vector<ReductionOutput> tds_outputs() {
  std::vector<ReductionOutput> out;
  for (const Graph& g : {complete_bipartite(3, 3), prism_graph()}) {
    for (std::uint32_t k : {4u, 5u}) out.push_back(reduce_tds_regular(g, k));
  }
  for (const Graph& g : {path_graph(3), cycle_graph(4), path_graph(5)}) {
    for (std::uint32_t k : {2u, 3u}) out.push_back(reduce_tds_conv(g, k));
  }
  return out;
}

Outcome structural_certificates() {
  std::size_t outputs = 0, claim_fail = 0, size_fail = 0, claims = 0;
  auto audit = [&](const ReductionOutput& out, std::size_t expected) {
    ++outputs;
    size_fail += out.graph.order() != expected;
    for (const auto& c : certify(out)) {
      if (!c.holds) continue;  // promise only
      ++claims;
      claim_fail += !*c.holds;
    }
  };
  for (auto v : kHsVariants) {
    for (const auto& inst : hs_sweep(v)) audit(reduce_hs(inst, v), expected_order(v, inst));
  }
  for (const auto& out : tds_outputs()) {
    audit(out, expected_order(out.variant, static_cast<Vertex>(out.heads.size()), out.k));
  }
  return {claim_fail == 0 && size_fail == 0,
          fmt("%zu outputs, %zu claims checked, %zu claim failures, %zu size mismatches", outputs, claims, claim_fail,
              size_fail)};
}

// ---- 8 --------------------------------------------------------------------

Outcome tds_at_scale() {
  std::size_t bad = 0;
  std::string detail;
  for (const Graph& g : {complete_bipartite(3, 3), prism_graph()}) {
    const auto out = reduce_tds_regular(g, 4);
    const std::size_t n = g.order(), d = n - 4, k = 4;
    bad += out.graph.order() != n * (1 + (k - 3) * d + d * d);
    bad += regularity(out.graph) != std::optional<std::size_t>{2 * d};
    bad += induced_subgraph(out.graph, out.heads) != complement(g);
    const auto witness = forward_witness(out, brute_force_min_tds(g));
    bad += !is_multipacking(out.graph, all_pairs(out.graph), witness);
  }
  detail += "K33 and prism at k=4: size, 2d-regularity, complement and forward witness";
  std::size_t iff = 0;
  for (const Graph& g : {path_graph(3), cycle_graph(4), path_graph(5)}) {
    const auto tds = brute_force_min_tds(g).size();
    for (std::uint32_t k : {2u, 3u}) {
      const auto out = reduce_tds_conv(g, k);
      bad += (tds <= k) != (brute_force_mp(out.graph).size() >= k);
      bad += induced_subgraph(out.graph, out.heads) != complement(g);
      ++iff;
    }
  }
  detail += fmt("; conv iff on %zu (graph, k) pairs; %zu failures", iff, bad);
  return {bad == 0, detail};
}

// ---- 9 --------------------------------------------------------------------

Outcome duality() {
  std::size_t bad = 0, graphs = 0, chordal = 0;
  for (const auto& g : random_connected_sample()) {
    const auto mp = brute_force_mp(g).size();
    const auto gb = brute_force_gamma_b(g).cost();
    bad += mp > gb;
    bad += gb > 2 * mp + 3;
    ++graphs;
  }
  for (const auto& g : random_chordal_sample(200, 9)) {
    const auto mp = brute_force_mp(g).size();
    const auto gb = brute_force_gamma_b(g).cost();
    bad += 2 * gb > 3 * mp + (mp % 2);  // gb <= ceil(3 mp / 2)
    ++chordal;
  }
  return {bad == 0, fmt("%zu graphs for MP <= gamma_b <= 2MP+3, %zu chordal graphs for gamma_b <= ceil(3MP/2); %zu "
                        "violations",
                        graphs, chordal, bad)};
}

// ---- 10 -------------------------------------------------------------------

Outcome hyperbolicity_checks() {
  std::size_t bad = 0;
  SplitMix64 rng(kSeed + 10);
  for (int i = 0; i < 100; ++i) {
    const Graph t = random_tree(static_cast<Vertex>(rng.between(1, 30)), rng);
    bad += hyperbolicity(t, all_pairs(t)) != HalfInteger{};
  }
  const Graph c4 = cycle_graph(4);
  bad += hyperbolicity(c4, all_pairs(c4)) != HalfInteger::from_int(1);
  HalfInteger worst;
  for (const auto& g : random_chordal_sample(200, 10)) {
    const auto delta = hyperbolicity(g, all_pairs(g));
    worst = std::max(worst, delta);
    bad += delta > HalfInteger::from_int(1);
  }
  return {bad == 0, fmt("100 trees at 0, C4 at 1, 200 chordal graphs with max delta %s; %zu failures",
                        worst.to_string().c_str(), bad)};
}

// ---- 11 -------------------------------------------------------------------

Outcome havel_hakimi() {
  std::size_t built = 0, rejected = 0, bad = 0;
  for (std::uint32_t n = 3; n <= 30; ++n) {
    for (std::uint32_t d = 1; d <= n; ++d) {
      const bool feasible = d < n && (n * d) % 2 == 0;
      try {
        const Graph g = havel_hakimi_regular(n, d);
        bad += !feasible || g.order() != n || regularity(g) != std::optional<std::size_t>{d};
        ++built;
      } catch (const std::invalid_argument&) {
        bad += feasible;
        ++rejected;
      }
    }
  }
  return {bad == 0, fmt("%zu graphs built, %zu rejections, %zu wrong outcomes", built, rejected, bad)};
}

struct Criterion {
  std::string id;
  std::string name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"1", "solver-oracle equivalence", solver_oracle_equivalence},
      {"2", "candidate family superset", superset_property},
      {"3", "candidate family growth", family_growth},
      {"4", "gadget counts", gadget_counts},
      {"5a", "path counts, exact values", path_counts_exact},
      {"5b", "path counts, growth constants", path_counts_growth},
      {"6", "reduction round trips", reduction_round_trips},
      {"7", "structural certificates", structural_certificates},
      {"8", "TDS reductions", tds_at_scale},
      {"9", "broadcast duality", duality},
      {"10", "hyperbolicity", hyperbolicity_checks},
      {"11", "Havel-Hakimi", havel_hakimi},
  };

  CLI::App app{"Acceptance criteria"};
  std::vector<std::string> selected;
  app.add_option("criteria", selected, "criterion ids (1..11, 5a, 5b); 5 selects both parts");
  CLI11_PARSE(app, argc, argv);

  auto wanted = [&](const std::string& id) {
    if (selected.empty()) return true;
    for (const auto& s : selected) {
      if (s == id || (s + "a") == id || (s + "b") == id) return true;
    }
    return false;
  };

  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (!wanted(c.id)) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s C%-3s %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion matches the selection\n");
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
