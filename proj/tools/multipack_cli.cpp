// multipack: command-line front end for the multipacking toolkit.
//
// Exit codes: 0 success or a true verdict, 1 a false verdict, 2 usage
// error, 3 input error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "multipack/class_checkers.hpp"
#include "multipack/exact_solver.hpp"
#include "multipack/generators.hpp"
#include "multipack/io.hpp"
#include "multipack/oracle.hpp"
#include "multipack/path_counting.hpp"
#include "multipack/reductions.hpp"

using namespace multipack;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_set(std::span<const Vertex> members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(members[i]);
  }
  return s + "}";
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

// ---- solve ----------------------------------------------------------------

struct SolveOpts {
  std::string graph;
  std::string algo = "a158";
  bool json = false;
};

int run_solve(const SolveOpts& o) {
  const Graph g = load_graph(o.graph);
  const auto start = std::chrono::steady_clock::now();
  SolveResult r;
  bool has_family = true;
  if (o.algo == "brute") {
    r.witness = brute_force_mp(g);
    has_family = false;
  } else if (o.algo == "a162") {
    r = max_multipacking_162(g);
  } else {
    r = max_multipacking_158(g);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  // The witness is re-checked before it is reported.
  if (!is_multipacking(g, all_pairs(g), r.witness)) {
    throw std::logic_error("solver returned a set that is not a multipacking");
  }

  if (o.json) {
    nlohmann::json j;
    j["schema"] = "multipack.solve/1";
    j["instance"] = o.graph;
    j["algorithm"] = o.algo;
    j["mp"] = r.size();
    j["witness"] = r.witness.members();
    j["family_size"] = has_family ? nlohmann::json(r.family_size) : nlohmann::json(nullptr);
    j["wall_ms"] = ms;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "instance     " << o.graph << '\n'
              << "algorithm    " << o.algo << '\n'
              << "MP           " << r.size() << '\n'
              << "witness      " << format_set(r.witness.members()) << '\n';
    if (has_family) std::cout << "family size  " << r.family_size << '\n';
    std::printf("wall time    %.3f ms\n", ms);
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const std::string& graph_path, const std::string& set_path) {
  const Graph g = load_graph(graph_path);
  const VertexSet m = parse_vertex_set(read_file(set_path));
  for (Vertex v : m) {
    if (v >= g.order()) throw ParseError(0, "set member " + std::to_string(v) + " is not a vertex of the graph");
  }
  const bool ok = is_multipacking(g, all_pairs(g), m);
  std::cout << (ok ? "multipacking" : "not a multipacking") << '\n';
  return ok ? kExitOk : kExitFalse;
}

// ---- reduce ---------------------------------------------------------------

void write_reduction(const ReductionOutput& out, const std::string& prefix) {
  write_file(prefix + ".graph", serialize_graph(out.graph));
  write_file(prefix + ".labels", serialize_labels(out.provenance));
  write_file(prefix + ".claims", serialize_claims(out.claims));
  std::cout << "wrote " << prefix << ".graph (" << out.graph.order() << " vertices, " << out.graph.size()
            << " edges), " << prefix << ".labels, " << prefix << ".claims\n";
}

const std::map<std::string, ReductionVariant> kHsVariants{{"chordal", ReductionVariant::HsChordal},
                                                          {"hyperbolic", ReductionVariant::HsHalfHyperbolic},
                                                          {"bipartite", ReductionVariant::HsBipartite},
                                                          {"clawfree", ReductionVariant::HsClawFree}};
const std::map<std::string, ReductionVariant> kTdsVariants{{"regular", ReductionVariant::TdsRegular},
                                                           {"conv", ReductionVariant::TdsConv}};

int run_reduce_hs(const std::string& path, const std::string& variant, const std::string& prefix) {
  const auto inst = parse_hitting_set(read_file(path));
  write_reduction(reduce_hs(inst, kHsVariants.at(variant)), prefix);
  return kExitOk;
}

int run_reduce_tds(const std::string& path, const std::string& variant, std::uint32_t k, const std::string& prefix) {
  const Graph g = load_graph(path);
  const auto out = kTdsVariants.at(variant) == ReductionVariant::TdsRegular ? reduce_tds_regular(g, k)
                                                                            : reduce_tds_conv(g, k);
  write_reduction(out, prefix);
  return kExitOk;
}

// ---- check ----------------------------------------------------------------

int run_check(const std::string& path, const std::vector<std::string>& props) {
  const Graph g = load_graph(path);
  bool all_true = true;
  for (const auto& p : props) {
    if (p == "chordal") {
      const auto r = is_chordal(g);
      all_true &= r.chordal;
      std::cout << "chordal        " << (r.chordal ? "true" : "false");
      if (r.chordal) {
        std::cout << "  elimination order " << format_set(r.elimination_order);
      } else {
        std::cout << "  chordless cycle " << format_set(r.chordless_cycle);
      }
    } else if (p == "bipartite") {
      const auto r = is_bipartite(g);
      all_true &= r.bipartite;
      std::cout << "bipartite      " << (r.bipartite ? "true" : "false");
      if (r.bipartite) {
        std::vector<Vertex> left;
        for (Vertex v = 0; v < g.order(); ++v) {
          if (r.side[v] == 0) left.push_back(v);
        }
        std::cout << "  side 0 " << format_set(left);
      } else {
        std::cout << "  odd cycle " << format_set(r.odd_cycle);
      }
    } else if (p == "clawfree") {
      const auto r = is_clawfree(g);
      all_true &= r.claw_free;
      std::cout << "clawfree       " << (r.claw_free ? "true" : "false");
      if (r.claw) {
        const auto& c = *r.claw;
        std::cout << "  claw centre " << c[0] << " leaves " << format_set(std::span(c).subspan(1));
      }
    } else if (p == "regular") {
      const auto d = regularity(g);
      all_true &= d.has_value();
      std::cout << "regular        " << (d ? "true" : "false");
      if (d) {
        std::cout << "  degree " << *d;
      } else {
        Vertex lo = 0, hi = 0;
        for (Vertex v = 1; v < g.order(); ++v) {
          if (g.degree(v) < g.degree(lo)) lo = v;
          if (g.degree(v) > g.degree(hi)) hi = v;
        }
        std::cout << "  deg(" << lo << ")=" << g.degree(lo) << " deg(" << hi << ")=" << g.degree(hi);
      }
    } else if (p == "hyperbolicity") {
      std::cout << "hyperbolicity  ";
      if (!is_connected(g)) {
        std::cout << "undefined (disconnected)";
      } else {
        std::cout << hyperbolicity(g, all_pairs(g)).to_string();
      }
    } else {
      throw UsageError("unknown property '" + p + "'");
    }
    std::cout << '\n';
  }
  return all_true ? kExitOk : kExitFalse;
}

// ---- count paths ----------------------------------------------------------

int run_count_paths(std::size_t n, const std::string& kind_name, std::size_t verify_upto) {
  const CountKind kind = kind_name == "maximal" ? CountKind::Maximal : CountKind::All;
  if (verify_upto > kBruteForceCap) {
    throw UsageError("--verify-upto is limited to " + std::to_string(kBruteForceCap));
  }
  const auto table = count_path(kind, std::max(n, verify_upto));
  bool ok = true;
  std::cout << "n\tcount";
  if (verify_upto) std::cout << "\tenumerated\tmatch";
  std::cout << '\n';
  for (std::size_t i = 1; i <= n; ++i) {
    std::cout << i << '\t' << table.at(i);
    if (i <= verify_upto) {
      const Graph p = path_graph(static_cast<Vertex>(i));
      const std::size_t seen = kind == CountKind::All ? enumerate_multipackings(p).size()
                                                      : enumerate_maximal_multipackings(p).size();
      const bool match = table.at(i) == seen;
      ok &= match;
      std::cout << '\t' << seen << '\t' << (match ? "yes" : "NO");
    }
    std::cout << '\n';
  }
  // Rows past n are still checked when --verify-upto reaches further.
  for (std::size_t i = n + 1; i <= verify_upto; ++i) {
    const Graph p = path_graph(static_cast<Vertex>(i));
    const std::size_t seen = kind == CountKind::All ? enumerate_multipackings(p).size()
                                                    : enumerate_maximal_multipackings(p).size();
    ok &= table.at(i) == seen;
  }
  return ok ? kExitOk : kExitFalse;
}

// ---- duality --------------------------------------------------------------

int run_duality(const std::string& path) {
  const Graph g = load_graph(path);
  const auto r = duality_report(g);
  std::vector<Vertex> broadcasters;
  std::ostringstream powers;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (r.broadcast_witness.power[v] > 0) {
      if (!broadcasters.empty()) powers << ", ";
      broadcasters.push_back(v);
      powers << v << ":" << r.broadcast_witness.power[v];
    }
  }
  std::cout << "MP                 " << r.mp << "  " << format_set(r.mp_witness.members()) << '\n'
            << "gamma_b            " << r.gamma_b << "  {" << powers.str() << "}\n"
            << "MP <= gamma_b      " << (r.mp <= r.gamma_b ? "holds" : "FAILS") << '\n'
            << "gamma_b <= 2MP+3   " << (r.bound_2mp3_ok ? "holds" : "FAILS") << '\n';
  if (r.bound_chordal_ok) {
    std::cout << "chordal bound      " << (*r.bound_chordal_ok ? "holds" : "FAILS") << '\n';
  }
  const bool ok = r.mp <= r.gamma_b && r.bound_2mp3_ok && r.bound_chordal_ok.value_or(true);
  return ok ? kExitOk : kExitFalse;
}

// ---- bench family ---------------------------------------------------------

struct BenchOpts {
  std::size_t trees = 50;
  Vertex min_n = 2;
  Vertex max_n = 20;
  std::uint64_t seed = 1;
  std::string algo = "a158";
};

int run_bench_family(const BenchOpts& o) {
  if (o.min_n < 1 || o.min_n > o.max_n) throw UsageError("need 1 <= --min-n <= --max-n");
  if (o.max_n > kMaxComponentOrder) throw UsageError("--max-n is limited to 64");
  SplitMix64 root(o.seed);
  std::cout << "n,family_size,growth\n";
  for (Vertex n = o.min_n; n <= o.max_n; ++n) {
    SplitMix64 rng = root.split();
    std::size_t worst = 0;
    for (std::size_t t = 0; t < o.trees; ++t) {
      const auto tree = bfs_tree(random_tree(n, rng), 0);
      const auto size = o.algo == "a162" ? fibonacci_family(tree).size() : candidate_family(tree).size();
      worst = std::max(worst, size);
    }
    std::printf("%u,%zu,%.6f\n", n, worst, std::pow(static_cast<double>(worst), 1.0 / n));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipacking solvers, oracles, reductions and class checkers."};
  app.require_subcommand(1);

  SolveOpts solve_opts;
  auto* solve = app.add_subcommand("solve", "Maximum multipacking of a graph");
  solve->add_option("graph", solve_opts.graph, "edge-list file")->required();
  solve->add_option("--algo", solve_opts.algo, "brute, a162 or a158")
      ->check(CLI::IsMember({"brute", "a162", "a158"}))
      ->capture_default_str();
  solve->add_flag("--json", solve_opts.json, "machine-readable report");

  std::string verify_graph, verify_set;
  auto* verify = app.add_subcommand("verify", "Exit 0 iff the set is a multipacking");
  verify->add_option("graph", verify_graph)->required();
  verify->add_option("set", verify_set, "set file: size, then members")->required();

  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
  reduce->require_subcommand(1);
  std::string hs_path, hs_variant, hs_out;
  auto* reduce_hs_cmd = reduce->add_subcommand("hs", "From a hitting-set instance");
  reduce_hs_cmd->add_option("instance", hs_path)->required();
  reduce_hs_cmd->add_option("--variant", hs_variant)
      ->required()
      ->check(CLI::IsMember({"chordal", "hyperbolic", "bipartite", "clawfree"}));
  reduce_hs_cmd->add_option("--out", hs_out, "output prefix")->required();
  std::string tds_path, tds_variant, tds_out;
  std::uint32_t tds_k = 0;
  auto* reduce_tds_cmd = reduce->add_subcommand("tds", "From a total-domination instance");
  reduce_tds_cmd->add_option("graph", tds_path)->required();
  reduce_tds_cmd->add_option("--variant", tds_variant)->required()->check(CLI::IsMember({"regular", "conv"}));
  reduce_tds_cmd->add_option("-k", tds_k)->required();
  reduce_tds_cmd->add_option("--out", tds_out, "output prefix")->required();

  std::string check_path;
  std::vector<std::string> check_props{"chordal", "bipartite", "clawfree", "regular", "hyperbolicity"};
  auto* check = app.add_subcommand("check", "Graph class membership with witnesses");
  check->add_option("graph", check_path)->required();
  check->add_option("--props", check_props, "comma-separated")
      ->delimiter(',')
      ->check(CLI::IsMember({"chordal", "bipartite", "clawfree", "regular", "hyperbolicity"}));

  auto* count = app.add_subcommand("count", "Closed-form multipacking counts");
  count->require_subcommand(1);
  std::size_t count_n = 0, count_verify = 0;
  std::string count_kind = "all";
  auto* count_paths = count->add_subcommand("paths", "Multipackings of paths");
  count_paths->add_option("-n", count_n)->required()->check(CLI::PositiveNumber);
  count_paths->add_option("--kind", count_kind)->check(CLI::IsMember({"all", "maximal"}))->capture_default_str();
  count_paths->add_option("--verify-upto", count_verify, "compare against enumeration up to this n");

  std::string duality_path;
  auto* duality = app.add_subcommand("duality", "Multipacking and broadcast domination side by side");
  duality->add_option("graph", duality_path)->required();

  BenchOpts bench_opts;
  auto* bench = app.add_subcommand("bench", "Reproducible experiments");
  bench->require_subcommand(1);
  auto* bench_family = bench->add_subcommand("family", "Candidate family size on random trees");
  bench_family->add_option("--trees", bench_opts.trees)->required();
  bench_family->add_option("--max-n", bench_opts.max_n)->required();
  bench_family->add_option("--min-n", bench_opts.min_n)->capture_default_str();
  bench_family->add_option("--seed", bench_opts.seed)->required();
  bench_family->add_option("--algo", bench_opts.algo)->check(CLI::IsMember({"a158", "a162"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return run_solve(solve_opts);
    if (*verify) return run_verify(verify_graph, verify_set);
    if (*reduce_hs_cmd) return run_reduce_hs(hs_path, hs_variant, hs_out);
    if (*reduce_tds_cmd) return run_reduce_tds(tds_path, tds_variant, tds_k, tds_out);
    if (*check) return run_check(check_path, check_props);
    if (*count_paths) return run_count_paths(count_n, count_kind, count_verify);
    if (*duality) return run_duality(duality_path);
    if (*bench_family) return run_bench_family(bench_opts);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error (disconnected) and length_error (caps)
    // all describe the input.
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
