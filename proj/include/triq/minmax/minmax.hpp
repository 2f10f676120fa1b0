#pragma once

// (min,max)-product by parallel binary search over batches of range-pair
// disjointness queries:
//
//   C[i][j] <= x  iff  {k : A[i][k] <= x} and {k : B[k][j] <= x} intersect,
//
// and both sets are prefixes of the row/column permutations sorted by value.

#include <algorithm>
#include <numeric>
#include <tuple>
#include <vector>

#include "triq/core/error.hpp"
#include "triq/core/solver_types.hpp"
#include "triq/core/types.hpp"

namespace triq {

// All 2n^2 entries ranked 1..2n^2 by (value, matrix, position), the sorted
// permutations of every row of A and column of B, and their concatenation T
// (rows of A first, then columns of B). 0-based indices throughout.
struct SortedPermutationTable {
  Index n = 0;
  DenseMatrix rank_a;               // rank of A[i][k]
  DenseMatrix rank_b;               // rank of B[k][j]
  std::vector<Value> value_of;      // value_of[rank], rank in [1, 2n^2]
  std::vector<std::vector<Index>> row_perm;   // A_i: columns by rank
  std::vector<std::vector<Index>> col_perm;   // B_j: rows by rank
  std::vector<std::vector<Value>> row_ranks;  // ranks along A_i, increasing
  std::vector<std::vector<Value>> col_ranks;  // ranks along B_j, increasing
  std::vector<Value> concatenated;            // T

  // 1-based range of A_i / B_j inside T.
  [[nodiscard]] Range row_segment(Index i) const { return {i * n + 1, i * n + n}; }
  [[nodiscard]] Range col_segment(Index j) const { return {n * n + j * n + 1, n * n + j * n + n}; }

  // Number of entries of A_i / B_j with rank <= x.
  [[nodiscard]] Index row_prefix(Index i, Value x) const {
    return static_cast<Index>(std::upper_bound(row_ranks[i].begin(), row_ranks[i].end(), x) - row_ranks[i].begin());
  }
  [[nodiscard]] Index col_prefix(Index j, Value x) const {
    return static_cast<Index>(std::upper_bound(col_ranks[j].begin(), col_ranks[j].end(), x) - col_ranks[j].begin());
  }
};

inline void check_minmax_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw ShapeError("(min,max)-product needs two square matrices of equal dimension");
  }
  if (a.rows() == 0) throw ShapeError("(min,max)-product of empty matrices");
}

[[nodiscard]] inline SortedPermutationTable build_permutation_table(const DenseMatrix& a, const DenseMatrix& b) {
  check_minmax_shape(a, b);
  SortedPermutationTable t;
  const Index n = a.rows();
  t.n = n;
  // (value, matrix, position)
  std::vector<std::tuple<Value, int, Index>> all;
  all.reserve(2 * n * n);
  for (Index p = 0; p < n * n; ++p) all.emplace_back(a.entries()[p], 0, p);
  for (Index p = 0; p < n * n; ++p) all.emplace_back(b.entries()[p], 1, p);
  std::sort(all.begin(), all.end());
  t.rank_a = DenseMatrix(n, n);
  t.rank_b = DenseMatrix(n, n);
  t.value_of.assign(2 * n * n + 1, 0);
  for (Index r = 0; r < all.size(); ++r) {
    const auto [value, which, pos] = all[r];
    const auto rank = static_cast<Value>(r + 1);
    (which == 0 ? t.rank_a : t.rank_b)(pos / n, pos % n) = rank;
    t.value_of[r + 1] = value;
  }

  auto sorted_by = [n](auto&& rank_at) {
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    std::sort(perm.begin(), perm.end(), [&](Index x, Index y) { return rank_at(x) < rank_at(y); });
    std::vector<Value> ranks;
    for (Index k : perm) ranks.push_back(rank_at(k));
    return std::pair{perm, ranks};
  };
  for (Index i = 0; i < n; ++i) {
    auto [perm, ranks] = sorted_by([&](Index k) { return t.rank_a(i, k); });
    t.row_perm.push_back(std::move(perm));
    t.row_ranks.push_back(std::move(ranks));
  }
  for (Index j = 0; j < n; ++j) {
    auto [perm, ranks] = sorted_by([&](Index k) { return t.rank_b(k, j); });
    t.col_perm.push_back(std::move(perm));
    t.col_ranks.push_back(std::move(ranks));
  }
  for (const auto& p : t.row_perm)
    for (Index k : p) t.concatenated.push_back(static_cast<Value>(k));
  for (const auto& p : t.col_perm)
    for (Index k : p) t.concatenated.push_back(static_cast<Value>(k));
  return t;
}

struct MinmaxStats {
  std::vector<Index> batch_sizes;
  Index skipped_empty = 0;  // probes answered without a query
  bool monotone = true;     // every cell's probe outcomes are monotone in x
};

[[nodiscard]] inline DenseMatrix minmax_product(const DenseMatrix& a, const DenseMatrix& b,
                                                const DisjointSolver& disjoint, MinmaxStats* stats = nullptr) {
  const SortedPermutationTable t = build_permutation_table(a, b);
  const Index n = t.n;
  const Index cells = n * n;
  const auto top = static_cast<Value>(2 * n * n);
  MinmaxStats local;
  MinmaxStats& st = stats ? *stats : local;
  st = {};

  // C[i][j] >= max(min of row i of A, min of column j of B), so probes never
  // see an empty prefix.
  std::vector<Value> lo(cells), hi(cells, top);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) lo[i * n + j] = std::max(t.row_ranks[i].front(), t.col_ranks[j].front());

  std::vector<std::vector<std::pair<Value, bool>>> trace(cells);
  const IntArray array(t.concatenated);
  Index rounds = 0;
  while ((Value{1} << rounds) < top) ++rounds;

  for (Index round = 0; round < rounds; ++round) {
    std::vector<RangePair> queries;
    std::vector<Index> asked;
    std::vector<Value> probe(cells);
    queries.reserve(cells);
    for (Index c = 0; c < cells; ++c) {
      const Index i = c / n, j = c % n;
      probe[c] = lo[c] + (hi[c] - lo[c]) / 2;
      const Index pa = t.row_prefix(i, probe[c]);
      const Index pb = t.col_prefix(j, probe[c]);
      if (pa == 0 || pb == 0) {
        ++st.skipped_empty;
        lo[c] = probe[c] + 1;
        trace[c].emplace_back(probe[c], false);
        continue;
      }
      const Range ra = t.row_segment(i), rb = t.col_segment(j);
      queries.push_back({{ra.l, ra.l + pa - 1}, {rb.l, rb.l + pb - 1}});
      asked.push_back(c);
    }
    st.batch_sizes.push_back(queries.size());
    const std::vector<bool> answer = disjoint(array, queries);
    for (Index k = 0; k < asked.size(); ++k) {
      const Index c = asked[k];
      const bool at_most = !answer[k];
      trace[c].emplace_back(probe[c], at_most);
      if (lo[c] == hi[c]) continue;
      if (at_most)
        hi[c] = probe[c];
      else
        lo[c] = probe[c] + 1;
    }
  }

  for (auto& cell : trace) {
    std::sort(cell.begin(), cell.end());
    for (Index k = 1; k < cell.size(); ++k)
      if (cell[k - 1].second && !cell[k].second) st.monotone = false;
  }

  DenseMatrix c(n, n);
  for (Index p = 0; p < cells; ++p) c(p / n, p % n) = t.value_of[lo[p]];
  return c;
}

}  // namespace triq
