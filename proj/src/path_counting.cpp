#include "multipack/path_counting.hpp"

#include <stdexcept>

namespace multipack {

CountTable count_all_path(std::size_t max_n) {
  if (max_n == 0) throw std::invalid_argument("path length must be at least 1");
  CountTable t{CountKind::All, {}};
  t.values.reserve(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (n <= 3) {
      t.values.emplace_back(n + 1);
    } else {
      t.values.push_back(t.at(n - 1) + t.at(n - 3));
    }
  }
  return t;
}

CountTable count_maximal_path(std::size_t max_n) {
  if (max_n == 0) throw std::invalid_argument("path length must be at least 1");
  // Index i holds c(i - 2), so c(-2), c(-1), c(0) sit at 0, 1, 2.
  std::vector<BigCount> c{0, 1, 1, 1, 2, 3};
  for (std::size_t n = 4; n <= max_n; ++n) c.push_back(c[n - 1] + c[n - 2] + c[n - 3]);
  CountTable t{CountKind::Maximal, {}};
  t.values.assign(c.begin() + 3, c.begin() + 3 + static_cast<std::ptrdiff_t>(max_n));
  return t;
}

CountTable count_path(CountKind kind, std::size_t max_n) {
  return kind == CountKind::All ? count_all_path(max_n) : count_maximal_path(max_n);
}

}  // namespace multipack
