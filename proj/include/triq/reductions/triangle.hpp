#pragma once

// Range-pair queries <-> per-edge triangle problems.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "triq/core/counters.hpp"
#include "triq/core/graph.hpp"
#include "triq/core/normalize.hpp"
#include "triq/core/parallel.hpp"
#include "triq/core/solver_types.hpp"
#include "triq/reductions/segment.hpp"

namespace triq {

// ---------------------------------------------------------------------------
// Graph -> array. The array is every vertex's neighbor list in vertex order;
// edge (u, v) with u < v asks for pairs between Nb(u) and Nb(v).

struct NeighborArray {
  IntArray values;
  std::vector<RangePair> queries;  // aligned with g.edges()
};

[[nodiscard]] inline NeighborArray neighbor_array(const Graph& g) {
  std::vector<Value> values;
  values.reserve(2 * g.m());
  std::vector<Range> segment(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    const Index begin = values.size() + 1;
    for (Vertex w : g.neighbors(v)) values.push_back(w);
    segment[v] = {begin, values.size()};
  }
  std::vector<RangePair> queries;
  queries.reserve(g.m());
  for (const Edge& e : g.edges()) queries.push_back({segment[e.u], segment[e.v]});
  return {IntArray(std::move(values)), std::move(queries)};
}

[[nodiscard]] inline std::vector<Value> reduce_etc_to_2req(const Graph& g, const PairSolver& eqp) {
  const NeighborArray na = neighbor_array(g);
  return eqp(na.values, na.queries);
}

[[nodiscard]] inline std::vector<bool> reduce_etd_to_2rdq(const Graph& g, const DisjointSolver& disjoint) {
  const NeighborArray na = neighbor_array(g);
  std::vector<bool> out = disjoint(na.values, na.queries);
  out.flip();
  return out;
}

// ---------------------------------------------------------------------------
// Array -> graph.

// Tripartite multigraph for a batch of range pairs plus the per-query lists
// of V-W edges. U is the normalized value domain, V the base intervals used
// by first ranges, W those used by second ranges. The U-V multiplicity is
// the number of occurrences of the value inside the base interval.
struct QueryMultigraph {
  TripartiteMultigraph graph;
  Index n_pad = 1;
  std::vector<std::vector<Index>> query_edges;  // indices into graph.vw
};

[[nodiscard]] inline QueryMultigraph build_multigraph(const IntArray& a, std::span<const RangePair> queries) {
  validate_all(queries, a.size());
  QueryMultigraph out;
  const Index n = a.size();
  out.n_pad = padded_size(n);
  // Dummy slots get a value outside the normalized domain.
  std::vector<Value> padded(out.n_pad, static_cast<Value>(out.n_pad + 1));
  const IntArray ranks = normalize(a);
  std::copy(ranks.values().begin(), ranks.values().end(), padded.begin());
  const Index domain = distinct_count(a);

  // Base-interval heap id -> local vertex id in V or W.
  std::unordered_map<Index, Vertex> v_id, w_id;
  std::vector<BaseInterval> v_base, w_base;
  auto local = [](std::unordered_map<Index, Vertex>& ids, std::vector<BaseInterval>& bases, const BaseInterval& b,
                  Index n_pad) {
    auto [it, fresh] = ids.try_emplace(b.id(n_pad), static_cast<Vertex>(bases.size()));
    if (fresh) bases.push_back(b);
    return it->second;
  };

  std::unordered_map<std::uint64_t, Index> vw_index;
  out.query_edges.resize(queries.size());
  for (Index qi = 0; qi < queries.size(); ++qi) {
    const RangePair& q = queries[qi];
    const auto left = base_decompose(q.first.l - 1, q.first.r - 1, out.n_pad);
    const auto right = base_decompose(q.second.l - 1, q.second.r - 1, out.n_pad);
    std::vector<Vertex> lv, rw;
    for (const auto& b : left) lv.push_back(local(v_id, v_base, b, out.n_pad));
    for (const auto& b : right) rw.push_back(local(w_id, w_base, b, out.n_pad));
    for (Vertex x : lv) {
      for (Vertex y : rw) {
        const std::uint64_t key = (std::uint64_t{x} << 32) | y;
        auto [it, fresh] = vw_index.try_emplace(key, out.graph.vw.size());
        if (fresh) out.graph.vw.push_back({x, y});
        out.query_edges[qi].push_back(it->second);
      }
    }
  }

  auto occurrences = [&](const std::vector<BaseInterval>& bases, std::vector<MultiEdge>& edges) {
    std::unordered_map<Value, Value> count;
    for (Vertex local_id = 0; local_id < bases.size(); ++local_id) {
      count.clear();
      for (Index p = bases[local_id].lo(); p <= bases[local_id].hi(); ++p) ++count[padded[p]];
      std::vector<std::pair<Value, Value>> sorted(count.begin(), count.end());
      std::sort(sorted.begin(), sorted.end());
      for (auto [value, c] : sorted) edges.push_back({static_cast<Vertex>(value), local_id, c});
    }
  };
  occurrences(v_base, out.graph.uv);
  occurrences(w_base, out.graph.uw);
  out.graph.u_count = domain;
  out.graph.v_count = v_base.size();
  out.graph.w_count = w_base.size();
  return out;
}

// Triangles through each V-W edge counted with multiplicity:
// sum over u of mult(u, v) * mult(u, w).
[[nodiscard]] inline std::vector<Value> multigraph_vw_counts_oracle(const TripartiteMultigraph& g) {
  std::vector<std::unordered_map<Vertex, Value>> at_v(g.v_count), at_w(g.w_count);
  for (const auto& e : g.uv) at_v[e.b][e.a] += e.multiplicity;
  for (const auto& e : g.uw) at_w[e.b][e.a] += e.multiplicity;
  std::vector<Value> out;
  out.reserve(g.vw.size());
  for (const Edge& e : g.vw) {
    Value s = 0;
    for (auto [u, m] : at_v[e.u])
      if (auto it = at_w[e.v].find(u); it != at_w[e.v].end()) s += m * it->second;
    out.push_back(s);
  }
  return out;
}

namespace detail {

// Global vertex ids: U first, then V, then W.
struct TripartiteIds {
  Index u_count, v_count;
  [[nodiscard]] Vertex u(Vertex x) const { return x; }
  [[nodiscard]] Vertex v(Vertex x) const { return static_cast<Vertex>(u_count + x); }
  [[nodiscard]] Vertex w(Vertex x) const { return static_cast<Vertex>(u_count + v_count + x); }
};

inline constexpr Index kAbsent = static_cast<Index>(-1);

// Simple graph with the given U-V and U-W edges plus every V-W edge whose
// endpoints both have a U neighbor (the others lie in no triangle),
// compacted. Returns the compact edge id of every V-W edge, or kAbsent.
inline std::pair<CompactGraph, std::vector<Index>> simple_layer(const TripartiteMultigraph& g,
                                                                const std::vector<Edge>& uv_uw_edges) {
  const TripartiteIds ids{g.u_count, g.v_count};
  std::vector<bool> touched(g.u_count + g.v_count + g.w_count, false);
  for (const Edge& e : uv_uw_edges) touched[e.v] = true;
  std::vector<Edge> edges = uv_uw_edges;
  for (const Edge& e : g.vw)
    if (touched[ids.v(e.u)] && touched[ids.w(e.v)]) edges.push_back({ids.v(e.u), ids.w(e.v)});
  std::vector<Index> vw_ids(g.vw.size(), kAbsent);
  if (edges.size() == uv_uw_edges.size()) return {CompactGraph{}, std::move(vw_ids)};
  CompactGraph cg = compact_graph(edges);
  auto compact = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(cg.label.begin(), cg.label.end(), x) - cg.label.begin());
  };
  for (Index k = 0; k < g.vw.size(); ++k) {
    const Edge& e = g.vw[k];
    if (touched[ids.v(e.u)] && touched[ids.w(e.v)])
      vw_ids[k] = *cg.graph.edge_id(compact(ids.v(e.u)), compact(ids.w(e.v)));
  }
  return {std::move(cg), std::move(vw_ids)};
}

}  // namespace detail

// Simple graph G^{i,j}: U-V edges whose multiplicity has bit i, U-W edges
// whose multiplicity has bit j, all V-W edges.
[[nodiscard]] inline std::vector<Edge> bit_layer_edges(const TripartiteMultigraph& g, unsigned i, unsigned j) {
  const detail::TripartiteIds ids{g.u_count, g.v_count};
  std::vector<Edge> edges;
  for (const auto& e : g.uv)
    if ((e.multiplicity >> i) & 1) edges.push_back({ids.u(e.a), ids.v(e.b)});
  for (const auto& e : g.uw)
    if ((e.multiplicity >> j) & 1) edges.push_back({ids.u(e.a), ids.w(e.b)});
  return edges;
}

struct EtcReductionStats {
  Index n_pad = 0;
  Index uv_edges = 0;
  Index uw_edges = 0;
  Index vw_edges = 0;
  unsigned bits = 0;
  Index inner_calls = 0;
};

// Triangle counts through each V-W edge of the multigraph via bit layers:
// Δ_e = Σ_{i,j} 2^{i+j} Δ_e^{i,j}.
[[nodiscard]] inline std::vector<Value> split_vw_counts(const TripartiteMultigraph& g, const EdgeCountSolver& solver,
                                                        unsigned threads = 1, unsigned* bits_out = nullptr) {
  Value max_mult = 1;
  for (const auto& e : g.uv) max_mult = std::max(max_mult, e.multiplicity);
  for (const auto& e : g.uw) max_mult = std::max(max_mult, e.multiplicity);
  const auto bits = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(max_mult)));
  if (bits_out) *bits_out = bits;

  std::vector<std::vector<Value>> layer(bits * bits);
  parallel_for(layer.size(), threads, [&](std::size_t k) {
    const auto i = static_cast<unsigned>(k / bits);
    const auto j = static_cast<unsigned>(k % bits);
    auto& out = layer[k];
    out.assign(g.vw.size(), 0);
    auto [cg, vw_ids] = detail::simple_layer(g, bit_layer_edges(g, i, j));
    if (cg.graph.m() == 0) return;  // no V-W edge can close a triangle
    ++counters().inner_solver_calls;
    const std::vector<Value> counts = solver(cg.graph);
    for (Index e = 0; e < vw_ids.size(); ++e)
      if (vw_ids[e] != detail::kAbsent) out[e] = counts[vw_ids[e]] << (i + j);
  });
  std::vector<Value> total(g.vw.size(), 0);
  for (const auto& part : layer)
    for (Index e = 0; e < total.size(); ++e) total[e] += part[e];
  return total;
}

[[nodiscard]] inline std::vector<Value> reduce_2req_to_etc(const IntArray& a, std::span<const RangePair> queries,
                                                           const EdgeCountSolver& solver, unsigned threads = 1,
                                                           EtcReductionStats* stats = nullptr) {
  validate_all(queries, a.size());
  if (queries.empty()) return {};
  const QueryMultigraph qm = build_multigraph(a, queries);
  unsigned bits = 0;
  const std::vector<Value> per_edge = split_vw_counts(qm.graph, solver, threads, &bits);
  if (stats) {
    *stats = {qm.n_pad, qm.graph.uv.size(), qm.graph.uw.size(), qm.graph.vw.size(), bits, Index{bits} * bits};
  }
  std::vector<Value> out;
  out.reserve(queries.size());
  for (const auto& edges : qm.query_edges) {
    Value s = 0;
    for (Index e : edges) s += per_edge[e];
    out.push_back(s);
  }
  return out;
}

// Boolean variant: multiplicities collapse to plain edges and one detection
// call decides all queries. true = the two ranges share no value.
[[nodiscard]] inline std::vector<bool> reduce_2rdq_to_etd(const IntArray& a, std::span<const RangePair> queries,
                                                          const EdgeDetectSolver& solver) {
  validate_all(queries, a.size());
  if (queries.empty()) return {};
  const QueryMultigraph qm = build_multigraph(a, queries);
  const auto& g = qm.graph;
  const detail::TripartiteIds ids{g.u_count, g.v_count};
  std::vector<Edge> edges;
  for (const auto& e : g.uv) edges.push_back({ids.u(e.a), ids.v(e.b)});
  for (const auto& e : g.uw) edges.push_back({ids.u(e.a), ids.w(e.b)});
  auto [cg, vw_ids] = detail::simple_layer(g, edges);
  std::vector<bool> detected;
  if (cg.graph.m() > 0) {
    ++counters().inner_solver_calls;
    detected = solver(cg.graph);
  }
  std::vector<bool> out;
  out.reserve(queries.size());
  for (const auto& list : qm.query_edges) {
    bool disjoint = true;
    for (Index e : list) disjoint = disjoint && (vw_ids[e] == detail::kAbsent || !detected[vw_ids[e]]);
    out.push_back(disjoint);
  }
  return out;
}

}  // namespace triq
