#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string_view>
#include <vector>

#include "triq/core/graph.hpp"
#include "triq/core/types.hpp"

namespace triq {

enum class ListingStatus { kComplete, kTruncated, kFailed };

[[nodiscard]] inline std::string_view to_string(ListingStatus s) {
  switch (s) {
    case ListingStatus::kComplete:
      return "complete";
    case ListingStatus::kTruncated:
      return "truncated";
    case ListingStatus::kFailed:
      return "failed";
  }
  return "?";
}

// Sorted, duplicate-free triangles of some graph.
struct ListingResult {
  std::vector<Triangle> triangles;
  ListingStatus status = ListingStatus::kComplete;
};

// Lists up to `cap` triangles of a graph.
using Lister = std::function<ListingResult(const Graph&, Index cap)>;

namespace detail {

inline void sort_unique(std::vector<Triangle>& ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

}  // namespace detail

// Degree-ordered enumeration: orient each edge towards the endpoint of
// higher (degree, id) and intersect out-lists, so every triangle is found
// once from its lowest vertex. Stops after cap + 1 hits to tell a full
// listing from a truncated one.
[[nodiscard]] inline ListingResult baseline_list(const Graph& g, Index cap) {
  const Index n = g.n();
  std::vector<Index> rank(n);
  {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
      return g.degree(x) != g.degree(y) ? g.degree(x) < g.degree(y) : x < y;
    });
    for (Index i = 0; i < n; ++i) rank[order[i]] = i;
  }
  std::vector<std::vector<Vertex>> out(n);
  for (const Edge& e : g.edges()) {
    if (rank[e.u] < rank[e.v])
      out[e.u].push_back(e.v);
    else
      out[e.v].push_back(e.u);
  }
  // Edges arrive sorted by (u, v), but out-lists mix both directions.
  for (auto& list : out) std::sort(list.begin(), list.end());

  ListingResult res;
  std::vector<Vertex> common;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : out[u]) {
      common.clear();
      std::set_intersection(out[u].begin(), out[u].end(), out[v].begin(), out[v].end(),
                            std::back_inserter(common));
      for (Vertex w : common) {
        if (res.triangles.size() == cap) {
          res.status = ListingStatus::kTruncated;
          std::sort(res.triangles.begin(), res.triangles.end());
          return res;
        }
        res.triangles.push_back(Triangle::of(u, v, w));
      }
    }
  }
  std::sort(res.triangles.begin(), res.triangles.end());
  return res;
}

[[nodiscard]] inline Lister baseline_lister() {
  return [](const Graph& g, Index cap) { return baseline_list(g, cap); };
}

// Maps triangles of a compacted graph back to the caller's vertex ids.
[[nodiscard]] inline std::vector<Triangle> relabel(std::span<const Triangle> ts, std::span<const Vertex> label) {
  std::vector<Triangle> out;
  out.reserve(ts.size());
  for (const Triangle& t : ts) out.push_back(Triangle::of(label[t.a], label[t.b], label[t.c]));
  return out;
}

}  // namespace triq
