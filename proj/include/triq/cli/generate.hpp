#pragma once

// Seeded instance generators. Every generator is a pure function of its
// parameters and the RandomSource state.

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "triq/core/error.hpp"
#include "triq/core/graph.hpp"
#include "triq/core/random.hpp"
#include "triq/core/types.hpp"

namespace triq::gen {

// Bernoulli(p) from 53 random bits.
inline bool coin(RandomSource& rng, double p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  constexpr double kScale = 9007199254740992.0;  // 2^53
  return static_cast<double>(rng.next() >> 11) < p * kScale;
}

inline Value uniform(RandomSource& rng, Value lo, Value hi) {
  return lo + static_cast<Value>(rng.below(static_cast<std::uint64_t>(hi - lo) + 1));
}

[[nodiscard]] inline IntArray array(Index n, Value lo, Value hi, RandomSource& rng) {
  if (n == 0) throw InputError("array length must be positive");
  if (lo > hi) throw InputError("empty value range");
  std::vector<Value> v(n);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return IntArray::checked(std::move(v), std::max({std::abs(lo), std::abs(hi), default_value_cap(n)}));
}

enum class Lengths { kUniform, kShort, kLong, kMixed };

[[nodiscard]] inline Lengths parse_lengths(std::string_view s) {
  if (s == "uniform") return Lengths::kUniform;
  if (s == "short") return Lengths::kShort;
  if (s == "long") return Lengths::kLong;
  if (s == "mixed") return Lengths::kMixed;
  throw InputError("unknown length distribution '" + std::string(s) + "'");
}

// A range inside [lo, hi] (1-based) with the given length profile.
inline Range sub_range(Index lo, Index hi, Lengths kind, RandomSource& rng) {
  const Index span = hi - lo + 1;
  if (kind == Lengths::kMixed) kind = static_cast<Lengths>(rng.below(3));
  Index len = 1;
  switch (kind) {
    case Lengths::kShort:
      len = 1 + rng.below(std::min<Index>(span, 4));
      break;
    case Lengths::kLong:
      len = span - rng.below((span + 1) / 2);
      break;
    default: {
      Index a = lo + rng.below(span), b = lo + rng.below(span);
      if (a > b) std::swap(a, b);
      return {a, b};
    }
  }
  const Index l = lo + rng.below(span - len + 1);
  return {l, l + len - 1};
}

[[nodiscard]] inline std::vector<Range> ranges(Index n, Index q, Lengths kind, RandomSource& rng) {
  if (n == 0 && q > 0) throw InputError("queries need a nonempty array");
  std::vector<Range> out;
  out.reserve(q);
  for (Index i = 0; i < q; ++i) out.push_back(sub_range(1, n, kind, rng));
  return out;
}

// Range pairs: a split point s, the first range inside [1, s], the second
// inside [s + 1, n].
[[nodiscard]] inline std::vector<RangePair> pairs(Index n, Index q, Lengths kind, RandomSource& rng) {
  if (q > 0 && n < 2) throw InputError("range pairs need an array of length at least 2");
  std::vector<RangePair> out;
  out.reserve(q);
  for (Index i = 0; i < q; ++i) {
    const Index s = 1 + rng.below(n - 1);
    out.push_back({sub_range(1, s, kind, rng), sub_range(s + 1, n, kind, rng)});
  }
  return out;
}

// Drops isolated vertices and relabels densely in increasing id order.
[[nodiscard]] inline Graph from_edges(std::vector<Edge> edges) {
  if (edges.empty()) return Graph(0, {});
  return compact_graph(edges).graph;
}

[[nodiscard]] inline Graph gnp(Index n, double p, RandomSource& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng, p)) edges.push_back({u, v});
  return from_edges(std::move(edges));
}

[[nodiscard]] inline Graph complete(Index n) {
  if (n < 2) throw InputError("complete graph needs at least 2 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

[[nodiscard]] inline Graph cycle(Index n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph(n, std::move(edges));
}

[[nodiscard]] inline Graph star(Index leaves) {
  if (leaves < 1) throw InputError("star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

[[nodiscard]] inline Graph bipartite(Index left, Index right, double p, RandomSource& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < left; ++u)
    for (Vertex v = 0; v < right; ++v)
      if (coin(rng, p)) edges.push_back({u, static_cast<Vertex>(left + v)});
  return from_edges(std::move(edges));
}

// Chung-Lu style: vertex i has weight (i + 1)^(-1 / (exponent - 1)); about
// m edges are drawn with probability proportional to the weight product.
[[nodiscard]] inline Graph power_law(Index n, Index m, double exponent, RandomSource& rng) {
  if (exponent <= 1.0) throw InputError("power-law exponent must exceed 1");
  std::vector<double> w(n);
  double total = 0;
  for (Index i = 0; i < n; ++i) total += w[i] = std::pow(static_cast<double>(i + 1), -1.0 / (exponent - 1.0));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng, std::min(1.0, static_cast<double>(m) * w[u] * w[v] / (total * total / 2.0))))
        edges.push_back({u, v});
  return from_edges(std::move(edges));
}

[[nodiscard]] inline DenseMatrix matrix(Index rows, Index cols, Value lo, Value hi, RandomSource& rng) {
  if (lo > hi) throw InputError("empty value range");
  DenseMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = uniform(rng, lo, hi);
  return m;
}

[[nodiscard]] inline DenseMatrix boolean_matrix(Index d, double p, RandomSource& rng) {
  DenseMatrix m(d, d);
  for (Index r = 0; r < d; ++r)
    for (Index c = 0; c < d; ++c) m(r, c) = coin(rng, p) ? 1 : 0;
  return m;
}

}  // namespace triq::gen
