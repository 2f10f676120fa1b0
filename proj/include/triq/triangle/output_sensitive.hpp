#pragma once

// Listing t triangles for t >= m from a lister that handles t <= zeta * m.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <vector>

#include "triq/core/counters.hpp"
#include "triq/core/error.hpp"
#include "triq/core/graph.hpp"
#include "triq/core/parallel.hpp"
#include "triq/core/random.hpp"
#include "triq/triangle/listing.hpp"

namespace triq {

struct InnerListingOptions {
  Index zeta = 128;
  // Rounds = ceil(repetition * log2 m).
  double repetition = 2.0;
  unsigned threads = 1;
};

struct InnerListingStats {
  bool used_baseline = false;
  Index colors = 0;
  Index rounds = 0;
  Index removed_vertices = 0;
  Index max_degree_after = 0;  // over vertices that were kept
  double degree_bound = 0;     // m / r
  Index edge_limit = 0;        // floor(zeta * q)
  Index failed_triples = 0;
  Index vulnerable_triples = 0;
};

// Lists all triangles of g with high probability when g has at most t.
//
// With r = t / m colors: vertices of degree above m / r are handled by a
// full edge scan and removed; then every round colors the rest at random
// and lists up to zeta * q triangles (q = m^3 / t^2) in each 3-colored
// subgraph that has at most zeta * q edges. Output is always a subset of
// the true triangles.
[[nodiscard]] inline ListingResult inner_listing(const Graph& g, Value t, RandomSource rng,
                                                 const InnerListingOptions& opt = {},
                                                 InnerListingStats* stats = nullptr) {
  if (t <= 0) throw InputError("triangle target t must be positive");
  InnerListingStats local;
  InnerListingStats& st = stats ? *stats : local;
  st = {};
  const Index m = g.m();
  const auto target = static_cast<Index>(t);
  if (m == 0) return {};
  // t > m^1.5 exceeds the triangle count of any m-edge graph, so a full
  // scan stays within O(t).
  const double m_pow = std::pow(static_cast<double>(m), 1.5);
  if (target <= opt.zeta * m || static_cast<double>(target) > m_pow) {
    st.used_baseline = true;
    return baseline_list(g, target);
  }

  const double r_exact = static_cast<double>(t) / static_cast<double>(m);
  const auto r = static_cast<Index>(r_exact);
  const double md = static_cast<double>(m);
  const double q = md * md * md / (static_cast<double>(t) * static_cast<double>(t));
  st.colors = r;
  st.degree_bound = md / r_exact;
  st.edge_limit = static_cast<Index>(std::floor(static_cast<double>(opt.zeta) * q));
  const Index limit = st.edge_limit;

  std::vector<Triangle> found;
  std::vector<bool> removed(g.n(), false);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (static_cast<double>(g.degree(v)) <= st.degree_bound) continue;
    removed[v] = true;
    ++st.removed_vertices;
    for (const Edge& e : g.edges())
      if (e.u != v && e.v != v && g.has_edge(v, e.u) && g.has_edge(v, e.v)) found.push_back(Triangle::of(v, e.u, e.v));
  }
  std::vector<Edge> rest;
  for (const Edge& e : g.edges())
    if (!removed[e.u] && !removed[e.v]) rest.push_back(e);
  {
    std::vector<Index> deg(g.n(), 0);
    for (const Edge& e : rest) ++deg[e.u], ++deg[e.v];
    for (Index d : deg) st.max_degree_after = std::max(st.max_degree_after, d);
  }

  st.rounds = static_cast<Index>(std::ceil(opt.repetition * std::log2(std::max(md, 2.0))));
  std::vector<Index> color(g.n());
  for (Index round = 0; round < st.rounds; ++round) {
    for (Vertex v = 0; v < g.n(); ++v) color[v] = rng.below(r);
    // bucket[a * r + b], a < b: edges colored {a, b}.
    std::vector<std::vector<Edge>> bucket(r * r);
    for (const Edge& e : rest) {
      Index a = color[e.u], b = color[e.v];
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      bucket[a * r + b].push_back(e);
    }
    std::vector<std::array<Index, 3>> triples;
    for (Index a = 0; a < r; ++a)
      for (Index b = a + 1; b < r; ++b)
        for (Index c = b + 1; c < r; ++c) triples.push_back({a, b, c});

    std::vector<std::vector<Triangle>> listed(triples.size());
    std::vector<char> verdict(triples.size(), 0);  // 1 failed, 2 vulnerable
    parallel_for(triples.size(), opt.threads, [&](std::size_t k) {
      const auto [a, b, c] = triples[k];
      const auto& ab = bucket[a * r + b];
      const auto& ac = bucket[a * r + c];
      const auto& bc = bucket[b * r + c];
      const Index size = ab.size() + ac.size() + bc.size();
      if (size > limit) {
        verdict[k] = 1;
        return;
      }
      if (ab.empty() || ac.empty() || bc.empty()) return;
      std::vector<Edge> sub;
      sub.reserve(size);
      sub.insert(sub.end(), ab.begin(), ab.end());
      sub.insert(sub.end(), ac.begin(), ac.end());
      sub.insert(sub.end(), bc.begin(), bc.end());
      const CompactGraph cg = compact_graph(sub);
      ++counters().inner_solver_calls;
      ListingResult part = baseline_list(cg.graph, limit);
      if (part.triangles.size() == limit) verdict[k] = 2;
      listed[k] = relabel(part.triangles, cg.label);
    });
    for (Index k = 0; k < triples.size(); ++k) {
      st.failed_triples += verdict[k] == 1;
      st.vulnerable_triples += verdict[k] == 2;
      found.insert(found.end(), listed[k].begin(), listed[k].end());
    }
  }

  ListingResult res;
  res.triangles = std::move(found);
  detail::sort_unique(res.triangles);
  res.status = res.triangles.size() <= target ? ListingStatus::kComplete : ListingStatus::kTruncated;
  return res;
}

struct MainListingStats {
  Index inner_calls = 0;
  Index last_level = 0;  // s of the last sampling level run
};

// Lists at least t triangles with probability >= 1/2 when g has that many,
// otherwise a subset. For s = 0..ceil(log2 m) keeps each vertex with
// probability 2^-s and lists 32t triangles of the induced subgraph.
[[nodiscard]] inline ListingResult main_listing(const Graph& g, Value t, RandomSource rng,
                                                const InnerListingOptions& opt = {},
                                                MainListingStats* stats = nullptr) {
  if (t < 1) throw InputError("triangle target t must be positive");
  MainListingStats local;
  MainListingStats& st = stats ? *stats : local;
  st = {};
  const Index m = g.m();
  const auto target = static_cast<Index>(t);
  const auto top = static_cast<unsigned>(std::bit_width(std::max<Index>(m, 2) - 1));
  std::vector<Triangle> found;
  for (unsigned s = 0; s <= top; ++s) {
    st.last_level = s;
    RandomSource level = rng.split(s);
    std::vector<bool> keep(g.n());
    for (Vertex v = 0; v < g.n(); ++v) keep[v] = level.one_in_pow2(s);
    std::vector<Edge> sub;
    for (const Edge& e : g.edges())
      if (keep[e.u] && keep[e.v]) sub.push_back(e);
    if (sub.empty()) continue;
    const CompactGraph cg = compact_graph(sub);
    ++st.inner_calls;
    const ListingResult part = inner_listing(cg.graph, 32 * t, level.split(0x1157), opt);
    for (const Triangle& tri : relabel(part.triangles, cg.label))
      if (g.is_triangle(tri)) found.push_back(tri);
    detail::sort_unique(found);
    if (found.size() >= target) break;
  }
  ListingResult res;
  res.triangles = std::move(found);
  if (res.triangles.size() >= target) {
    res.triangles.resize(target);
    res.status = ListingStatus::kTruncated;
  }
  return res;
}

// Repeats main_listing with independent streams until t triangles are
// collected or `retries` extra attempts are used up; results are unioned.
[[nodiscard]] inline ListingResult main_listing_with_retries(const Graph& g, Value t, RandomSource rng,
                                                             unsigned retries = 10,
                                                             const InnerListingOptions& opt = {},
                                                             Index* attempts = nullptr) {
  std::vector<Triangle> all;
  const auto target = static_cast<Index>(std::max<Value>(t, 1));
  Index used = 0;
  for (unsigned k = 0; k <= retries; ++k) {
    ++used;
    const ListingResult part = main_listing(g, t, rng.split(k), opt);
    all.insert(all.end(), part.triangles.begin(), part.triangles.end());
    detail::sort_unique(all);
    if (all.size() >= target) break;
  }
  if (attempts) *attempts = used;
  ListingResult res;
  res.triangles = std::move(all);
  if (res.triangles.size() >= target) {
    res.triangles.resize(target);
    res.status = ListingStatus::kTruncated;
  }
  return res;
}

}  // namespace triq
