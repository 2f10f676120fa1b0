#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "triq/core/normalize.hpp"
#include "triq/core/pair_function.hpp"
#include "triq/rangequery/extender.hpp"

namespace triq {

// Block length n / sqrt(q), at least 1.
[[nodiscard]] inline Index mo_block_size(Index n, Index q) {
  if (q == 0) return std::max<Index>(n, 1);
  const auto b = static_cast<Index>(static_cast<double>(n) / std::sqrt(static_cast<double>(q)));
  return std::max<Index>(b, 1);
}

// Offline single-range f-pairs queries by Mo's ordering: sort by
// (floor(l / B), r) and walk one extender through the queries.
// With q > n^2 every range is precomputed instead.
[[nodiscard]] inline std::vector<Value> mo_offline(const PairFunction& f, const IntArray& a,
                                                   std::span<const Range> queries) {
  require_extender(f);
  validate_all(queries, a.size());
  const Index n = a.size();
  const Index q = queries.size();
  std::vector<Value> out(q);
  if (q == 0) return out;

  const IntArray ranks = normalize(a);
  auto ext = make_extender(f, ranks.values(), distinct_count(a));

  if (q > n * n) {
    // table[l][r - l] for 0-based inclusive [l, r]
    std::vector<std::vector<Value>> table(n);
    for (Index l = 0; l < n; ++l) {
      ext->reset(l);
      table[l].reserve(n - l);
      for (Index r = l; r < n; ++r) {
        ext->extend_right();
        table[l].push_back(ext->answer());
      }
    }
    for (Index i = 0; i < q; ++i) out[i] = table[queries[i].l - 1][queries[i].r - queries[i].l];
    return out;
  }

  const Index block = mo_block_size(n, q);
  std::vector<Index> order(q);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index x, Index y) {
    const Index bx = (queries[x].l - 1) / block;
    const Index by = (queries[y].l - 1) / block;
    if (bx != by) return bx < by;
    if (queries[x].r != queries[y].r) return queries[x].r < queries[y].r;
    return x < y;
  });

  ext->reset(queries[order.front()].l - 1);
  for (Index i : order) {
    ext->move_to(queries[i].l - 1, queries[i].r);
    out[i] = ext->answer();
  }
  return out;
}

}  // namespace triq
