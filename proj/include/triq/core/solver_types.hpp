#pragma once

#include <functional>
#include <span>
#include <vector>

#include "triq/core/graph.hpp"
#include "triq/core/types.hpp"

namespace triq {

// Batch solvers. Each one is bound to a fixed pair function; the array is
// passed in because reductions run their target solver on arrays they build.
using RangeSolver = std::function<std::vector<Value>(const IntArray&, std::span<const Range>)>;
using PairSolver = std::function<std::vector<Value>(const IntArray&, std::span<const RangePair>)>;
// true = the two ranges share no value.
using DisjointSolver =
    std::function<std::vector<bool>(const IntArray&, std::span<const RangePair>)>;

// Per-edge results aligned with Graph::edges().
using EdgeCountSolver = std::function<std::vector<Value>(const Graph&)>;
using EdgeDetectSolver = std::function<std::vector<bool>(const Graph&)>;

}  // namespace triq
