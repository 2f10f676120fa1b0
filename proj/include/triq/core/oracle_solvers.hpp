#pragma once

// The oracles wrapped as batch solvers, for plugging into reductions.

#include "triq/core/oracles.hpp"
#include "triq/core/solver_types.hpp"

namespace triq {

[[nodiscard]] inline RangeSolver oracle_range_solver(PairFunction f) {
  return [f = std::move(f)](const IntArray& a, std::span<const Range> qs) {
    return oracle_pairs_batch(f, a, qs);
  };
}

[[nodiscard]] inline PairSolver oracle_pair_solver(PairFunction f) {
  return [f = std::move(f)](const IntArray& a, std::span<const RangePair> qs) {
    return oracle_pairs_batch(f, a, qs);
  };
}

[[nodiscard]] inline DisjointSolver oracle_disjoint_solver() {
  return [](const IntArray& a, std::span<const RangePair> qs) { return oracle_disjoint_batch(a, qs); };
}

[[nodiscard]] inline EdgeCountSolver oracle_count_solver() {
  return [](const Graph& g) { return oracle_edge_triangle_counts(g); };
}

[[nodiscard]] inline EdgeDetectSolver oracle_detect_solver() {
  return [](const Graph& g) { return oracle_edge_triangle_detection(g); };
}

}  // namespace triq
