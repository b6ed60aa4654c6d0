#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace multipack {

using BigCount = boost::multiprecision::cpp_int;

enum class CountKind { All, Maximal };

/// values[i] is the count for the path on i+1 vertices.
struct CountTable {
  CountKind kind = CountKind::All;
  std::vector<BigCount> values;

  const BigCount& at(std::size_t n) const { return values.at(n - 1); }
};

/// Number of multipackings of P_1..P_N: c(n) = c(n-1) + c(n-3), from 2, 3, 4.
CountTable count_all_path(std::size_t max_n);

/// Number of maximal multipackings of P_1..P_N:
/// c(n) = c(n-3) + c(n-4) + c(n-5), from 1, 2, 3, with c(0) = c(-1) = 1 and
/// c(-2) = 0 below the range.
CountTable count_maximal_path(std::size_t max_n);

CountTable count_path(CountKind kind, std::size_t max_n);

}  // namespace multipack
