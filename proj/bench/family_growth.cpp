// Candidate-family sizes on seeded random trees, with the growth constant A
// of |family| ~ c * A^n fitted by least squares on log(max size).
//
//   family_growth [--min-n 10] [--max-n 30] [--trees 50] [--seed 1]

#include <cmath>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "multipack/exact_solver.hpp"
#include "multipack/generators.hpp"

using namespace multipack;

int main(int argc, char** argv) {
  CLI::App app{"Candidate family growth on random trees"};
  Vertex min_n = 10, max_n = 30;
  std::size_t trees = 50;
  std::uint64_t seed = 1;
  bool with_162 = false;
  app.add_option("--min-n", min_n)->capture_default_str();
  app.add_option("--max-n", max_n)->capture_default_str()->check(CLI::Range(1, 64));
  app.add_option("--trees", trees)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  app.add_flag("--with-162", with_162, "also size the plain recursion's family (slow)");
  CLI11_PARSE(app, argc, argv);
  if (min_n > max_n) {
    std::fprintf(stderr, "--min-n exceeds --max-n\n");
    return 2;
  }

  SplitMix64 root(seed);
  std::vector<double> xs, ys, ys162;
  std::printf("n,mean_158,max_158,growth_158%s\n", with_162 ? ",mean_162,max_162,growth_162" : "");
  for (Vertex n = min_n; n <= max_n; ++n) {
    SplitMix64 rng = root.split();
    double sum = 0, sum162 = 0;
    std::size_t worst = 0, worst162 = 0;
    for (std::size_t i = 0; i < trees; ++i) {
      const auto t = bfs_tree(random_tree(n, rng), 0);
      const auto size = candidate_family(t).size();
      sum += static_cast<double>(size);
      worst = std::max(worst, size);
      if (with_162) {
        const auto s162 = fibonacci_family(t).size();
        sum162 += static_cast<double>(s162);
        worst162 = std::max(worst162, s162);
      }
    }
    std::printf("%u,%.1f,%zu,%.5f", n, sum / trees, worst, std::pow(static_cast<double>(worst), 1.0 / n));
    if (with_162) {
      std::printf(",%.1f,%zu,%.5f", sum162 / trees, worst162, std::pow(static_cast<double>(worst162), 1.0 / n));
      ys162.push_back(std::log(static_cast<double>(worst162)));
    }
    std::printf("\n");
    xs.push_back(n);
    ys.push_back(std::log(static_cast<double>(worst)));
  }

  auto slope = [&](const std::vector<double>& y) {
    const double k = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += y[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * y[i];
    }
    const double den = k * sxx - sx * sx;
    return den == 0 ? 0.0 : (k * sxy - sx * sy) / den;
  };
  if (xs.size() >= 2) {
    std::printf("# fitted A (max, 1.58 family) = %.5f\n", std::exp(slope(ys)));
    if (with_162) std::printf("# fitted A (max, 1.62 family) = %.5f\n", std::exp(slope(ys162)));
  }
  return 0;
}
