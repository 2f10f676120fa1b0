#pragma once

// Listing up to m triangles with a detector, and detection with a lister.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "triq/core/counters.hpp"
#include "triq/core/graph.hpp"
#include "triq/core/random.hpp"
#include "triq/core/solver_types.hpp"
#include "triq/triangle/listing.hpp"

namespace triq {

namespace detail {

// Assigns dense ids to sparse 64-bit vertex keys while edges are collected.
class GraphBuilder {
 public:
  Vertex id(std::uint64_t key) {
    auto [it, fresh] = ids_.try_emplace(key, static_cast<Vertex>(ids_.size()));
    if (fresh) keys_.push_back(key);
    return it->second;
  }
  void add(std::uint64_t a, std::uint64_t b) { edges_.push_back({id(a), id(b)}); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::uint64_t key(Vertex v) const { return keys_[v]; }
  [[nodiscard]] Graph build() const { return Graph(keys_.size(), edges_); }

 private:
  std::unordered_map<std::uint64_t, Vertex> ids_;
  std::vector<std::uint64_t> keys_;
  std::vector<Edge> edges_;
};

inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<Index> comp(g.n(), g.n());
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] != g.n()) continue;
    auto& members = out.emplace_back();
    comp[s] = out.size() - 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] == g.n()) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return out;
}

}  // namespace detail

struct DetectionListingStats {
  Index iterations = 0;
  Index detector_calls = 0;
  bool capped = false;  // some E12 edges were dropped to respect t = 6m
};

// Lists min(m, t*) distinct triangles of g with O(log m) detector calls.
//
// Works on the 3-partite blow-up (copies v1, v2, v3 of every vertex, six
// edges per input edge), split into groups that each own a set V3 and
// shared copies of V1, V2 and E12. Every round halves each group's V3,
// keeps only E12 edges the detector confirms, and caps |E12| at 6m by
// dropping the lexicographically last (group, u, v). Once every V3 is a
// single vertex each surviving E12 edge names a triangle.
[[nodiscard]] inline ListingResult list_via_detection(const Graph& g, const EdgeDetectSolver& detect,
                                                      DetectionListingStats* stats = nullptr) {
  struct Group {
    std::vector<Vertex> v3;
    std::vector<Edge> e12;  // (u in V1, v in V2), original ids
    std::vector<Edge> e13;  // (x in V1, w in V3)
    std::vector<Edge> e23;  // (x in V2, w in V3)
  };
  const Index m = g.m();
  const Index cap = 6 * m;
  DetectionListingStats local;
  DetectionListingStats& st = stats ? *stats : local;
  st = {};

  std::vector<Group> groups;
  for (const auto& comp : detail::components(g)) {
    Group grp;
    grp.v3 = comp;
    for (Vertex u : comp) {
      for (Vertex v : g.neighbors(u)) {
        grp.e12.push_back({u, v});
        grp.e13.push_back({u, v});
        grp.e23.push_back({u, v});
      }
    }
    std::sort(grp.e12.begin(), grp.e12.end());
    groups.push_back(std::move(grp));
  }

  std::vector<int> side(g.n(), -1);
  bool split_needed = true;
  while (split_needed) {
    ++st.iterations;
    std::vector<Group> next;
    for (Group& grp : groups) {
      if (grp.v3.size() <= 1) {
        next.push_back(std::move(grp));
        continue;
      }
      const Index half = (grp.v3.size() + 1) / 2;
      for (Index i = 0; i < grp.v3.size(); ++i) side[grp.v3[i]] = i < half ? 0 : 1;
      for (int s = 0; s < 2; ++s) {
        Group child;
        child.e12 = grp.e12;
        for (Vertex w : grp.v3)
          if (side[w] == s) child.v3.push_back(w);
        for (const Edge& e : grp.e13)
          if (side[e.v] == s) child.e13.push_back(e);
        for (const Edge& e : grp.e23)
          if (side[e.v] == s) child.e23.push_back(e);
        next.push_back(std::move(child));
      }
    }
    groups = std::move(next);

    // Keys: group << 34 | part << 32 | vertex.
    detail::GraphBuilder builder;
    auto key = [](Index grp, std::uint64_t part, Vertex v) {
      return (std::uint64_t{grp} << 34) | (part << 32) | v;
    };
    std::vector<std::pair<Vertex, Vertex>> e12_ends;
    for (Index k = 0; k < groups.size(); ++k) {
      const Group& grp = groups[k];
      for (const Edge& e : grp.e12) {
        e12_ends.emplace_back(builder.id(key(k, 0, e.u)), builder.id(key(k, 1, e.v)));
        builder.add(key(k, 0, e.u), key(k, 1, e.v));
      }
      for (const Edge& e : grp.e13) builder.add(key(k, 0, e.u), key(k, 2, e.v));
      for (const Edge& e : grp.e23) builder.add(key(k, 1, e.u), key(k, 2, e.v));
    }
    if (builder.edges().empty()) break;
    const Graph blown = builder.build();
    ++st.detector_calls;
    ++counters().inner_solver_calls;
    const std::vector<bool> hit = detect(blown);

    Index idx = 0;
    Index kept = 0;
    for (Group& grp : groups) {
      std::vector<Edge> survivors;
      for (const Edge& e : grp.e12) {
        const auto [a, b] = e12_ends[idx++];
        if (!hit[*blown.edge_id(a, b)]) continue;
        if (kept == cap) {
          st.capped = true;
          continue;
        }
        survivors.push_back(e);
        ++kept;
      }
      grp.e12 = std::move(survivors);
    }

    // Drop V3 vertices and E*3 edges that can no longer close a triangle.
    std::vector<Group> pruned;
    split_needed = false;
    for (Group& grp : groups) {
      if (grp.e12.empty()) continue;
      std::vector<Vertex> left, right;
      for (const Edge& e : grp.e12) {
        left.push_back(e.u);
        right.push_back(e.v);
      }
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      auto has = [](const std::vector<Vertex>& s, Vertex x) { return std::binary_search(s.begin(), s.end(), x); };
      std::erase_if(grp.e13, [&](const Edge& e) { return !has(left, e.u); });
      std::erase_if(grp.e23, [&](const Edge& e) { return !has(right, e.u); });
      std::vector<Vertex> w13, w23;
      for (const Edge& e : grp.e13) w13.push_back(e.v);
      for (const Edge& e : grp.e23) w23.push_back(e.v);
      std::sort(w13.begin(), w13.end());
      std::sort(w23.begin(), w23.end());
      std::erase_if(grp.v3, [&](Vertex w) { return !has(w13, w) || !has(w23, w); });
      if (grp.v3.empty()) continue;
      split_needed = split_needed || grp.v3.size() > 1;
      pruned.push_back(std::move(grp));
    }
    groups = std::move(pruned);
  }

  ListingResult res;
  for (const Group& grp : groups) {
    if (grp.v3.size() != 1) continue;
    for (const Edge& e : grp.e12) {
      const Triangle t = Triangle::of(e.u, e.v, grp.v3.front());
      if (g.is_triangle(t)) res.triangles.push_back(t);
    }
  }
  detail::sort_unique(res.triangles);
  if (res.triangles.size() > m) res.triangles.resize(m);
  res.status = st.capped ? ListingStatus::kTruncated : ListingStatus::kComplete;
  return res;
}

struct DetectViaListingOptions {
  unsigned restart_cap = 20;
  // Pad every lister input with a star so it has as many edges as the
  // requested capacity, as a lister bound to "t = m" would need.
  bool pad = false;
};

struct DetectionResult {
  std::vector<bool> detected;  // aligned with g.edges()
  ListingStatus status = ListingStatus::kComplete;
  Index restarts = 0;
  Index lister_calls = 0;
};

// Las Vegas edge-triangle detection from a lister.
//
// Works on the blow-up with V1 = [0, n), V2 = [n, 2n), V3 = [2n, 3n).
// Phase s = L..0 runs 2L listings on the subgraph keeping each V3 vertex
// with probability 2^-s; every E12 edge seen in a listed triangle is
// reported and removed. A final listing with t = 1 on what is left checks
// that nothing was missed; otherwise the phases restart.
[[nodiscard]] inline DetectionResult detect_via_listing(const Graph& g, const Lister& lister, RandomSource rng,
                                                        const DetectViaListingOptions& opt = {}) {
  const Index n = g.n();
  const Index m = g.m();
  const Index blown_m = 6 * m;
  const Index capacity = 100 * blown_m;
  const unsigned levels = std::max(1u, static_cast<unsigned>(std::bit_width(std::max<Index>(blown_m, 2) - 1)));
  const auto edges = g.edges();

  DetectionResult res;
  res.detected.assign(m, false);
  if (m == 0) return res;
  std::vector<bool> active(m, true);
  auto remaining = [&] { return static_cast<Index>(std::count(active.begin(), active.end(), true)); };

  // Lists triangles on E12 (active edges) plus E*3 restricted to `keep`.
  auto run = [&](const std::vector<bool>& keep, Index cap) -> bool {
    std::vector<Edge> list;
    for (Index id = 0; id < m; ++id) {
      const auto [u, v] = edges[id];
      if (active[id]) {
        list.push_back({u, static_cast<Vertex>(n + v)});
        list.push_back({v, static_cast<Vertex>(n + u)});
      }
      for (int part = 0; part < 2; ++part) {
        const auto base = static_cast<Vertex>(part * n);
        if (keep[v]) list.push_back({base + u, static_cast<Vertex>(2 * n + v)});
        if (keep[u]) list.push_back({base + v, static_cast<Vertex>(2 * n + u)});
      }
    }
    if (list.empty()) return false;
    if (opt.pad && list.size() < cap) {
      const auto center = static_cast<Vertex>(3 * n);
      for (Index leaf = 1; list.size() < cap; ++leaf) list.push_back({center, static_cast<Vertex>(3 * n + leaf)});
    }
    const CompactGraph cg = compact_graph(list);
    ++res.lister_calls;
    ++counters().inner_solver_calls;
    const ListingResult listed = lister(cg.graph, cap);
    bool found = false;
    for (const Triangle& t : relabel(listed.triangles, cg.label)) {
      if (t.c >= 3 * n || t.a >= n || t.b < n || t.b >= 2 * n) continue;  // dummy or malformed
      const auto id = g.edge_id(t.a, static_cast<Vertex>(t.b - n));
      if (!id || !g.has_edge(t.a, static_cast<Vertex>(t.c - 2 * n)) ||
          !g.has_edge(static_cast<Vertex>(t.b - n), static_cast<Vertex>(t.c - 2 * n)))
        continue;
      found = true;
      res.detected[*id] = true;
      active[*id] = false;
    }
    return found;
  };

  for (unsigned attempt = 0;; ++attempt) {
    RandomSource stream = rng.split(attempt);
    for (int s = static_cast<int>(levels); s >= 0 && remaining() > 0; --s) {
      for (unsigned it = 0; it < 2 * levels && remaining() > 0; ++it) {
        std::vector<bool> keep(n);
        for (Vertex w = 0; w < n; ++w) keep[w] = stream.one_in_pow2(static_cast<unsigned>(s));
        run(keep, capacity);
      }
    }
    if (remaining() == 0 || !run(std::vector<bool>(n, true), 1)) {
      res.status = ListingStatus::kComplete;
      return res;
    }
    if (attempt == opt.restart_cap) {
      res.status = ListingStatus::kFailed;
      return res;
    }
    ++res.restarts;
  }
}

}  // namespace triq
