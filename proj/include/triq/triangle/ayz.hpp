#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "triq/core/error.hpp"
#include "triq/core/graph.hpp"
#include "triq/rangequery/matmul.hpp"

namespace triq {

[[nodiscard]] inline Index default_ayz_threshold(Index m) {
  return std::max<Index>(1, static_cast<Index>(std::ceil(std::sqrt(static_cast<double>(m)))));
}

// Per-edge triangle counts with a heavy/light split on the third vertex.
//
// Light third vertices (degree <= theta) are counted by enumerating wedges
// at them. Heavy third vertices: when both endpoints are heavy the count is
// an entry of H * H, H the adjacency matrix among heavy vertices; otherwise
// the light endpoint's neighbor list is scanned for heavy common neighbors.
[[nodiscard]] inline std::vector<Value> ayz_edge_counts(const Graph& g, Index theta,
                                                        MatmulAlgo algo = MatmulAlgo::kNaive) {
  if (theta < 1) throw InputError("degree threshold must be at least 1");
  const Index n = g.n();
  std::vector<Value> count(g.m(), 0);
  auto heavy = [&](Vertex v) { return g.degree(v) > theta; };

  for (Vertex w = 0; w < n; ++w) {
    if (heavy(w)) continue;
    auto nb = g.neighbors(w);
    for (Index i = 0; i < nb.size(); ++i)
      for (Index j = i + 1; j < nb.size(); ++j)
        if (auto id = g.edge_id(nb[i], nb[j])) ++count[*id];
  }

  std::vector<Index> heavy_index(n, n);
  std::vector<Vertex> heavy_list;
  for (Vertex v = 0; v < n; ++v) {
    if (heavy(v)) {
      heavy_index[v] = heavy_list.size();
      heavy_list.push_back(v);
    }
  }
  if (heavy_list.empty()) return count;

  DenseMatrix h(heavy_list.size(), heavy_list.size());
  for (const Edge& e : g.edges())
    if (heavy(e.u) && heavy(e.v)) h(heavy_index[e.u], heavy_index[e.v]) = h(heavy_index[e.v], heavy_index[e.u]) = 1;
  const DenseMatrix paths = matmul(h, h, algo);

  const auto edges = g.edges();
  for (Index id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    if (heavy(e.u) && heavy(e.v)) {
      count[id] += paths(heavy_index[e.u], heavy_index[e.v]);
      continue;
    }
    const Vertex light = heavy(e.u) ? e.v : e.u;
    const Vertex other = light == e.u ? e.v : e.u;
    for (Vertex w : g.neighbors(light))
      if (heavy(w) && w != other && g.has_edge(w, other)) ++count[id];
  }
  return count;
}

}  // namespace triq
