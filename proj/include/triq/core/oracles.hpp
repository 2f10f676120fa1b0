#pragma once

// Brute-force ground truth. Quadratic and cubic on purpose; every property
// test compares against these and nothing else.

#include <algorithm>
#include <vector>

#include "triq/core/graph.hpp"
#include "triq/core/pair_function.hpp"
#include "triq/core/types.hpp"

namespace triq {

[[nodiscard]] inline Value oracle_pairs_query(const PairFunction& f, const IntArray& a, const Range& q) {
  q.validate(a.size());
  Value s = 0;
  for (Index i = q.l - 1; i < q.r; ++i)
    for (Index j = i + 1; j < q.r; ++j) s += f(a[i], a[j]);
  return s;
}

[[nodiscard]] inline Value oracle_pairs_query(const PairFunction& f, const IntArray& a,
                                              const RangePair& q) {
  q.validate(a.size());
  Value s = 0;
  for (Index i = q.first.l - 1; i < q.first.r; ++i)
    for (Index j = q.second.l - 1; j < q.second.r; ++j) s += f(a[i], a[j]);
  return s;
}

template <typename Query>
[[nodiscard]] std::vector<Value> oracle_pairs_batch(const PairFunction& f, const IntArray& a,
                                                    std::span<const Query> queries) {
  std::vector<Value> out;
  out.reserve(queries.size());
  for (const Query& q : queries) out.push_back(oracle_pairs_query(f, a, q));
  return out;
}

// True iff no value occurs in both ranges.
[[nodiscard]] inline bool oracle_disjoint(const IntArray& a, const RangePair& q) {
  q.validate(a.size());
  for (Index i = q.first.l - 1; i < q.first.r; ++i)
    for (Index j = q.second.l - 1; j < q.second.r; ++j)
      if (a[i] == a[j]) return false;
  return true;
}

[[nodiscard]] inline std::vector<bool> oracle_disjoint_batch(const IntArray& a,
                                                             std::span<const RangePair> queries) {
  std::vector<bool> out;
  out.reserve(queries.size());
  for (const RangePair& q : queries) out.push_back(oracle_disjoint(a, q));
  return out;
}

// |N(u) ∩ N(v)| for every edge, aligned with g.edges().
[[nodiscard]] inline std::vector<Value> oracle_edge_triangle_counts(const Graph& g) {
  std::vector<Value> counts;
  counts.reserve(g.m());
  std::vector<Vertex> common;
  for (const Edge& e : g.edges()) {
    auto nu = g.neighbors(e.u);
    auto nv = g.neighbors(e.v);
    common.clear();
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    counts.push_back(static_cast<Value>(common.size()));
  }
  return counts;
}

[[nodiscard]] inline std::vector<bool> oracle_edge_triangle_detection(const Graph& g) {
  std::vector<bool> out;
  for (Value c : oracle_edge_triangle_counts(g)) out.push_back(c > 0);
  return out;
}

// Every triangle, sorted, no duplicates.
[[nodiscard]] inline std::vector<Triangle> oracle_triangle_list(const Graph& g) {
  std::vector<Triangle> out;
  for (const Edge& e : g.edges()) {
    for (Vertex w : g.neighbors(e.v)) {
      if (w > e.v && g.has_edge(e.u, w)) out.push_back({e.u, e.v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// C[i][j] = min_k max(A[i][k], B[k][j]).
[[nodiscard]] inline DenseMatrix oracle_minmax(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("(min,max)-product: inner dimensions differ");
  if (a.cols() == 0) throw ShapeError("(min,max)-product: empty inner dimension");
  DenseMatrix c(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) {
      Value best = std::max(a(i, 0), b(0, j));
      for (Index k = 1; k < a.cols(); ++k) best = std::min(best, std::max(a(i, k), b(k, j)));
      c(i, j) = best;
    }
  }
  return c;
}

}  // namespace triq
