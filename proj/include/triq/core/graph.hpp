#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "triq/core/error.hpp"
#include "triq/core/types.hpp"

namespace triq {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  [[nodiscard]] Edge canonical() const noexcept { return u < v ? *this : Edge{v, u}; }
  auto operator<=>(const Edge&) const = default;
};

// Undirected simple graph without isolated vertices, stored as CSR.
// Edges are kept in canonical (u < v) lexicographic order; per-edge results
// throughout the library are vectors aligned with edges().
class Graph {
 public:
  Graph() = default;

  Graph(Index n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
      if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u + 1));
      if (e.u >= n_ || e.v >= n_) {
        throw InputError("edge (" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) +
                         ") references a vertex outside [1," + std::to_string(n_) + "]");
      }
      e = e.canonical();
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
      throw InputError("parallel edge (" + std::to_string(dup->u + 1) + "," +
                       std::to_string(dup->v + 1) + ")");
    }
    build_adjacency();
    for (Vertex v = 0; v < n_; ++v) {
      if (degree(v) == 0) throw InputError("isolated vertex " + std::to_string(v + 1));
    }
  }

  [[nodiscard]] Index n() const noexcept { return n_; }
  [[nodiscard]] Index m() const noexcept { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  // Edge ids parallel to neighbors(v).
  [[nodiscard]] std::span<const Index> incident_edges(Vertex v) const noexcept {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] Index degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  [[nodiscard]] std::optional<Index> edge_id(Vertex u, Vertex v) const noexcept {
    if (u >= n_ || v >= n_) return std::nullopt;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return std::nullopt;
    return adj_edge_[offsets_[u] + static_cast<Index>(it - nb.begin())];
  }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const noexcept { return edge_id(u, v).has_value(); }

  [[nodiscard]] bool is_triangle(const Triangle& t) const noexcept {
    return t.a != t.b && t.b != t.c && has_edge(t.a, t.b) && has_edge(t.b, t.c) &&
           has_edge(t.a, t.c);
  }

 private:
  void build_adjacency() {
    offsets_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (Index i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adj_.resize(2 * edges_.size());
    adj_edge_.resize(2 * edges_.size());
    std::vector<Index> fill(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted, so each neighbor list comes out sorted: for vertex x,
    // smaller neighbors arrive via (w, x) edges before larger ones via (x, w).
    for (Index id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      adj_[fill[e.v]] = e.u;
      adj_edge_[fill[e.v]++] = id;
    }
    for (Index id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      adj_[fill[e.u]] = e.v;
      adj_edge_[fill[e.u]++] = id;
    }
  }

  Index n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Index> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<Index> adj_edge_;
};

// A graph built from an arbitrary edge list with isolated vertices stripped.
// label[v] is the caller's id of compact vertex v.
struct CompactGraph {
  Graph graph;
  std::vector<Vertex> label;
};

[[nodiscard]] inline CompactGraph compact_graph(std::span<const Edge> edges) {
  std::vector<Vertex> label;
  label.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    label.push_back(e.u);
    label.push_back(e.v);
  }
  std::sort(label.begin(), label.end());
  label.erase(std::unique(label.begin(), label.end()), label.end());
  auto id = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(label.begin(), label.end(), x) - label.begin());
  };
  std::vector<Edge> mapped;
  mapped.reserve(edges.size());
  for (const Edge& e : edges) mapped.push_back({id(e.u), id(e.v)});
  return {Graph(label.size(), std::move(mapped)), std::move(label)};
}

// Edge with a positive multiplicity.
struct MultiEdge {
  Vertex a = 0;
  Vertex b = 0;
  Value multiplicity = 1;
};

// Tripartite multigraph (U ∪ V ∪ W). Vertex ids are local to each part.
// U-V and U-W edges carry multiplicities; V-W edges are simple.
struct TripartiteMultigraph {
  Index u_count = 0;
  Index v_count = 0;
  Index w_count = 0;
  std::vector<MultiEdge> uv;  // a in U, b in V
  std::vector<MultiEdge> uw;  // a in U, b in W
  std::vector<Edge> vw;       // u in V, v in W

  [[nodiscard]] Value uv_weight() const {
    Value s = 0;
    for (const auto& e : uv) s += e.multiplicity;
    return s;
  }
  [[nodiscard]] Value uw_weight() const {
    Value s = 0;
    for (const auto& e : uw) s += e.multiplicity;
    return s;
  }
};

}  // namespace triq
