#include <gtest/gtest.h>

#include <sstream>

#include "test_util.hpp"
#include "triq/core/counters.hpp"
#include "triq/core/io.hpp"
#include "triq/core/normalize.hpp"
#include "triq/core/oracles.hpp"
#include "triq/core/parallel.hpp"

namespace triq {
namespace {

using fixtures::k;

TEST(Normalize, RanksDistinctValues) {
  EXPECT_EQ(normalize(IntArray({30, -5, 30, 7})), IntArray({2, 0, 2, 1}));
  EXPECT_EQ(normalize(IntArray({4})), IntArray({0}));
  EXPECT_EQ(normalize(IntArray({1, 2, 3})), IntArray({0, 1, 2}));
}

TEST(Normalize, IdempotentAndOrderPreserving) {
  RandomSource rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const Index n = 1 + rng.below(40);
    const IntArray a = gen::array(n, -20, 20, rng);
    const IntArray b = normalize(a);
    EXPECT_EQ(normalize(b), b);
    for (Index i = 0; i < n; ++i) {
      EXPECT_GE(b[i], 0);
      EXPECT_LT(b[i], static_cast<Value>(n));
      for (Index j = 0; j < n; ++j) EXPECT_EQ(a[i] < a[j], b[i] < b[j]);
    }
  }
}

TEST(Normalize, BitsFor) {
  EXPECT_EQ(bits_for(1), 1u);
  EXPECT_EQ(bits_for(2), 1u);
  EXPECT_EQ(bits_for(3), 2u);
  EXPECT_EQ(bits_for(8), 3u);
  EXPECT_EQ(bits_for(9), 4u);
}

TEST(IntArray, RejectsEmptyAndOversizedValues) {
  EXPECT_THROW(IntArray({}), InputError);
  EXPECT_THROW(IntArray::checked({1, 2}, 1), InputError);
  EXPECT_NO_THROW(IntArray::checked({4096, -4096}));
  EXPECT_THROW(IntArray::checked({4097}), InputError);
}

TEST(Range, Validation) {
  EXPECT_NO_THROW((Range{1, 3}.validate(3)));
  EXPECT_THROW((Range{0, 1}.validate(3)), RangeError);
  EXPECT_THROW((Range{3, 2}.validate(3)), RangeError);
  EXPECT_THROW((Range{2, 4}.validate(3)), RangeError);
  EXPECT_THROW((RangePair{{1, 2}, {2, 3}}.validate(3)), InputError);
  EXPECT_THROW((RangePair{{3, 3}, {1, 1}}.validate(3)), InputError);
}

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(Graph(2, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 2}}), InputError);
}

TEST(Graph, AdjacencyMatchesEdges) {
  const Graph g(4, {{2, 0}, {1, 3}, {0, 1}});
  ASSERT_EQ(g.m(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(2, 3));
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_EQ(*g.edge_id(3, 1), 2u);
}

TEST(Graph, CompactStripsIsolatedVertices) {
  const std::vector<Edge> edges{{5, 9}, {9, 12}};
  const CompactGraph c = compact_graph(edges);
  EXPECT_EQ(c.graph.n(), 3u);
  EXPECT_EQ(c.label, (std::vector<Vertex>{5, 9, 12}));
}

TEST(Oracle, PairsQueryExamples) {
  const auto inv = PairFunction::inv(), eqp = PairFunction::eqp();
  EXPECT_EQ(oracle_pairs_query(inv, IntArray({3, 1, 2}), Range{1, 3}), 2);
  EXPECT_EQ(oracle_pairs_query(inv, IntArray({1, 2, 3, 4}), Range{1, 4}), 0);
  EXPECT_EQ(oracle_pairs_query(eqp, IntArray({7, 7, 7}), Range{1, 3}), 3);
  EXPECT_EQ(oracle_pairs_query(eqp, IntArray({5, 5, 6}), RangePair{{1, 1}, {2, 3}}), 1);
}

TEST(Oracle, PairsQueryRejectsBadRanges) {
  EXPECT_THROW((void)oracle_pairs_query(PairFunction::eqp(), IntArray({1, 2}), Range{1, 3}), RangeError);
  EXPECT_THROW((void)oracle_pairs_query(PairFunction::eqp(), IntArray({1, 2}), RangePair{{1, 2}, {2, 2}}),
               InputError);
}

// inv_A + inv_{-A} + eqp_A covers every cross pair exactly once.
TEST(Oracle, TrichotomyIdentity) {
  RandomSource rng(3);
  for (int rep = 0; rep < 300; ++rep) {
    const Index n = 2 + rng.below(30);
    const IntArray a = gen::array(n, 0, static_cast<Value>(n) - 1, rng);
    std::vector<Value> neg(a.values().begin(), a.values().end());
    for (auto& v : neg) v = -v;
    const IntArray b(neg);
    for (const RangePair& q : gen::pairs(n, 5, gen::Lengths::kMixed, rng)) {
      const Value total = oracle_pairs_query(PairFunction::inv(), a, q) +
                          oracle_pairs_query(PairFunction::inv(), b, q) +
                          oracle_pairs_query(PairFunction::eqp(), a, q);
      EXPECT_EQ(total, static_cast<Value>(q.first.length() * q.second.length()));
    }
  }
}

TEST(Oracle, EdgeTriangleCounts) {
  for (Value c : oracle_edge_triangle_counts(k(4))) EXPECT_EQ(c, 2);
  for (Value c : oracle_edge_triangle_counts(k(3))) EXPECT_EQ(c, 1);
  for (Value c : oracle_edge_triangle_counts(fixtures::path3())) EXPECT_EQ(c, 0);
}

TEST(Oracle, TriangleList) {
  EXPECT_EQ(oracle_triangle_list(k(3)), (std::vector<Triangle>{{0, 1, 2}}));
  EXPECT_EQ(oracle_triangle_list(k(4)).size(), 4u);
  RandomSource rng(5);
  EXPECT_TRUE(oracle_triangle_list(gen::bipartite(6, 7, 0.6, rng)).empty());
}

TEST(Oracle, CountsSumToThreeTimesTriangles) {
  RandomSource rng(8);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = fixtures::nonempty_gnp(25, 0.3, rng);
    Value sum = 0;
    for (Value c : oracle_edge_triangle_counts(g)) sum += c;
    EXPECT_EQ(sum, 3 * static_cast<Value>(oracle_triangle_list(g).size()));
    const auto counts = oracle_edge_triangle_counts(g);
    const auto detected = oracle_edge_triangle_detection(g);
    for (Index e = 0; e < g.m(); ++e) EXPECT_EQ(detected[e], counts[e] > 0);
  }
}

TEST(Oracle, Minmax) {
  const auto a = DenseMatrix::from_rows({{1, 2}, {3, 4}});
  const auto b = DenseMatrix::from_rows({{5, 6}, {7, 8}});
  EXPECT_EQ(oracle_minmax(a, b), DenseMatrix::from_rows({{5, 6}, {5, 6}}));
  EXPECT_EQ(oracle_minmax(DenseMatrix::from_rows({{3}}), DenseMatrix::from_rows({{-2}})),
            DenseMatrix::from_rows({{3}}));
  const auto zero_row = DenseMatrix::from_rows({{0, 0, 0}, {1, 2, 3}, {4, 5, 6}});
  const auto c = DenseMatrix::from_rows({{9, 1, 4}, {2, 8, 7}, {6, 3, 5}});
  const DenseMatrix out = oracle_minmax(zero_row, c);
  EXPECT_EQ(out(0, 0), 2);
  EXPECT_EQ(out(0, 1), 1);
  EXPECT_EQ(out(0, 2), 4);
  EXPECT_THROW((void)oracle_minmax(a, DenseMatrix(3, 3)), ShapeError);
}

TEST(Oracle, MinmaxWithinInputBounds) {
  RandomSource rng(9);
  for (int rep = 0; rep < 50; ++rep) {
    const Index n = 1 + rng.below(8);
    const DenseMatrix a = gen::matrix(n, n, -50, 50, rng), b = gen::matrix(n, n, -50, 50, rng);
    Value lo = a(0, 0), hi = a(0, 0);
    for (auto* m : {&a, &b})
      for (Value v : m->entries()) lo = std::min(lo, v), hi = std::max(hi, v);
    const DenseMatrix out = oracle_minmax(a, b);
    for (Value v : out.entries()) {
      EXPECT_GE(v, lo);
      EXPECT_LE(v, hi);
    }
  }
}

TEST(Random, SplitIsIndependentOfConsumption) {
  RandomSource a(42), b(42);
  for (int i = 0; i < 10; ++i) (void)a.next();
  EXPECT_EQ(a.split(3).next(), b.split(3).next());
  EXPECT_NE(a.split(3).next(), a.split(4).next());
}

TEST(Random, OneInPow2Rate) {
  RandomSource rng(1);
  int hits = 0;
  for (int i = 0; i < 40000; ++i) hits += rng.one_in_pow2(2);
  EXPECT_NEAR(hits / 40000.0, 0.25, 0.02);
}

TEST(Parallel, FoldsCountersIntoCaller) {
  reset_counters();
  std::vector<int> out(100);
  parallel_for(out.size(), 4, [&](std::size_t i) {
    out[i] = static_cast<int>(i);
    ++counters().extender_steps;
  });
  EXPECT_EQ(counters().extender_steps, 100u);
  EXPECT_EQ(out[99], 99);
}

TEST(Io, RoundTrips) {
  std::stringstream s;
  io::write_array(s, IntArray({3, -1, 4}).values());
  EXPECT_EQ(io::read_array(s), IntArray({3, -1, 4}));

  std::stringstream g;
  io::write_graph(g, k(4));
  const Graph back = io::read_graph(g);
  EXPECT_EQ(back.m(), 6u);

  std::stringstream m;
  const auto mat = DenseMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  io::write_matrix(m, mat);
  EXPECT_EQ(io::read_matrix(m), mat);

  std::stringstream q;
  const std::vector<RangePair> pairs{{{1, 2}, {3, 4}}};
  io::write_queries(q, std::span<const RangePair>(pairs));
  EXPECT_EQ(io::read_queries(q, 4).pairs, pairs);
}

TEST(Io, ParseErrorsCarryLineNumbers) {
  std::stringstream bad_array("3\n1 2 x\n");
  try {
    (void)io::read_array(bad_array);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::stringstream bad_queries("1 2\n\n3 9\n");
  try {
    (void)io::read_queries(bad_queries, 4);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::stringstream mixed("1 2\n1 1 2 2\n");
  EXPECT_THROW((void)io::read_queries(mixed), InputError);
  std::stringstream isolated("3 1\n1 2\n");
  EXPECT_THROW((void)io::read_graph(isolated), InputError);
}

TEST(Io, EmptyQueryFile) {
  std::stringstream s("");
  EXPECT_EQ(io::read_queries(s).size(), 0u);
}

}  // namespace
}  // namespace triq
