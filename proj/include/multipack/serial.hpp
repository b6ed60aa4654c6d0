#pragma once

// Single-threaded reference versions of the parallel kernels. They share no
// loop structure with the parallel code and exist so tests and the benchmark
// can compare the two.

#include <span>

#include "multipack/class_checkers.hpp"
#include "multipack/graph.hpp"

namespace multipack::serial {

DistanceMatrix all_pairs(const Graph& g);
HalfInteger hyperbolicity(const DistanceMatrix& d);
VertexMask best_multipacking(const DistanceMatrix& d, std::span<const VertexMask> family);

}  // namespace multipack::serial
