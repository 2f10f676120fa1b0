#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"
#include "triq/core/oracle_solvers.hpp"
#include "triq/core/oracles.hpp"
#include "triq/reductions/triangle.hpp"
#include "triq/triangle/ayz.hpp"

namespace triq {
namespace {

const PairFunction kEqp = PairFunction::eqp();

TEST(BaseDecompose, Examples) {
  EXPECT_EQ(base_decompose(1, 2, 4), (std::vector<BaseInterval>{{0, 1}, {0, 2}}));
  EXPECT_EQ(base_decompose(0, 3, 4), (std::vector<BaseInterval>{{2, 0}}));
  const auto parts = base_decompose(1, 6, 8);
  EXPECT_EQ(parts.size(), 4u);
  Index next = 1;
  for (const auto& b : parts) {
    EXPECT_EQ(b.lo(), next);
    next = b.hi() + 1;
  }
  EXPECT_EQ(next, 7u);
}

TEST(BaseDecompose, Errors) {
  EXPECT_THROW((void)base_decompose(0, 4, 4), RangeError);
  EXPECT_THROW((void)base_decompose(2, 1, 4), RangeError);
  EXPECT_THROW((void)base_decompose(0, 1, 6), RangeError);
}

TEST(BaseDecompose, ExactCoverAndTwoPartialsPerLevel) {
  for (Index n_pad : {1, 2, 4, 16, 64}) {
    for (Index lo = 0; lo < n_pad; ++lo) {
      for (Index hi = lo; hi < n_pad; ++hi) {
        const auto d = base_decompose_traced(lo, hi, n_pad);
        Index next = lo;
        for (const auto& b : d.parts) {
          ASSERT_EQ(b.lo(), next);
          next = b.hi() + 1;
        }
        ASSERT_EQ(next, hi + 1);
        ASSERT_LE(d.max_partial_per_level, 2u);
        ASSERT_LE(d.parts.size(), 2 * std::max<Index>(1, std::bit_width(n_pad) - 1));
      }
    }
  }
}

TEST(EtcTo2req, Examples) {
  const auto eqp = oracle_pair_solver(kEqp);
  for (Value c : reduce_etc_to_2req(fixtures::k(3), eqp)) EXPECT_EQ(c, 1);
  for (Value c : reduce_etc_to_2req(fixtures::k(4), eqp)) EXPECT_EQ(c, 2);
  RandomSource rng(51);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = fixtures::nonempty_gnp(30, 0.3, rng);
    ASSERT_EQ(reduce_etc_to_2req(g, eqp), oracle_edge_triangle_counts(g));
  }
}

TEST(EtdTo2rdq, Examples) {
  const auto disjoint = oracle_disjoint_solver();
  for (bool b : reduce_etd_to_2rdq(fixtures::k(3), disjoint)) EXPECT_TRUE(b);
  for (bool b : reduce_etd_to_2rdq(gen::star(6), disjoint)) EXPECT_FALSE(b);
  RandomSource rng(52);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = fixtures::nonempty_gnp(25, 0.2, rng);
    ASSERT_EQ(reduce_etd_to_2rdq(g, disjoint), oracle_edge_triangle_detection(g));
  }
}

TEST(Multigraph, DummyPaddingAndUsedBases) {
  const IntArray a({4, 4, 9});
  const std::vector<RangePair> qs{{{1, 1}, {2, 3}}};
  const QueryMultigraph qm = build_multigraph(a, qs);
  EXPECT_EQ(qm.n_pad, 4u);
  EXPECT_EQ(qm.graph.u_count, 2u);
  EXPECT_EQ(qm.graph.v_count, 1u);
  EXPECT_EQ(qm.graph.w_count, 2u);  // [1,1] and [2,2] (0-based)
  EXPECT_EQ(qm.query_edges[0].size(), 2u);
  // No U vertex outside the normalized domain.
  for (const auto& e : qm.graph.uv) EXPECT_LT(e.a, qm.graph.u_count);
  for (const auto& e : qm.graph.uw) EXPECT_LT(e.a, qm.graph.u_count);
}

TEST(Multigraph, SharedBasePairsAreDeduplicated) {
  const IntArray a({1, 2, 3, 4});
  const std::vector<RangePair> qs{{{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}, {{1, 2}, {3, 3}}};
  const QueryMultigraph qm = build_multigraph(a, qs);
  EXPECT_EQ(qm.graph.vw.size(), 2u);
  EXPECT_EQ(qm.query_edges[0], qm.query_edges[1]);
}

// Σ_{i,j} 2^{i+j} Δ^{i,j} equals the multigraph triangle count per V-W edge.
TEST(Multigraph, BinarySplittingIsExact) {
  RandomSource rng(53);
  for (int rep = 0; rep < 100; ++rep) {
    const Index n = 2 + rng.below(40);
    const IntArray a = gen::array(n, 0, static_cast<Value>(rng.below(4)), rng);
    const auto qs = gen::pairs(n, 1 + rng.below(10), gen::Lengths::kMixed, rng);
    const QueryMultigraph qm = build_multigraph(a, qs);
    ASSERT_EQ(split_vw_counts(qm.graph, oracle_count_solver()), multigraph_vw_counts_oracle(qm.graph));
  }
}

TEST(TwoReqToEtc, Examples) {
  const auto count = oracle_count_solver();
  EXPECT_EQ(reduce_2req_to_etc(IntArray({1, 1, 2, 2}), std::vector<RangePair>{{{1, 2}, {3, 4}}}, count),
            std::vector<Value>{0});
  for (Index n : {2, 5, 17, 32}) {
    const IntArray a(std::vector<Value>(n, 5));
    EXPECT_EQ(reduce_2req_to_etc(a, std::vector<RangePair>{{{1, 1}, {2, n}}}, count),
              std::vector<Value>{static_cast<Value>(n) - 1});
  }
  EXPECT_TRUE(reduce_2req_to_etc(IntArray({1}), std::vector<RangePair>{}, count).empty());
}

TEST(TwoReqToEtc, RandomWithSizeBounds) {
  RandomSource rng(54);
  for (int rep = 0; rep < 150; ++rep) {
    const Index n = 2 + rng.below(63);
    const IntArray a = gen::array(n, 0, static_cast<Value>(rng.below(n) + 1), rng);
    const auto qs = gen::pairs(n, 1 + rng.below(64), gen::Lengths::kMixed, rng);
    EtcReductionStats st;
    const auto got = reduce_2req_to_etc(a, qs, oracle_count_solver(), 1, &st);
    ASSERT_EQ(got, oracle_pairs_batch<RangePair>(kEqp, a, qs));
    const double lg = std::log2(static_cast<double>(st.n_pad));
    EXPECT_LE(static_cast<double>(st.uv_edges + st.uw_edges), 2.0 * st.n_pad * (lg + 1));
    EXPECT_LE(static_cast<double>(st.vw_edges), qs.size() * std::pow(std::max(1.0, 2 * lg), 2));
  }
}

TEST(TwoReqToEtc, AyzInnerSolverAndThreads) {
  RandomSource rng(55);
  const EdgeCountSolver ayz = [](const Graph& g) { return ayz_edge_counts(g, 2); };
  for (int rep = 0; rep < 30; ++rep) {
    const Index n = 2 + rng.below(40);
    const IntArray a = gen::array(n, 0, 5, rng);
    const auto qs = gen::pairs(n, 20, gen::Lengths::kMixed, rng);
    ASSERT_EQ(reduce_2req_to_etc(a, qs, ayz, 3), oracle_pairs_batch<RangePair>(kEqp, a, qs));
  }
}

TEST(TwoRdqToEtd, Examples) {
  const auto detect = oracle_detect_solver();
  RandomSource rng(56);
  const IntArray distinct({1, 2, 3, 4});
  for (bool b : reduce_2rdq_to_etd(distinct, gen::pairs(4, 10, gen::Lengths::kMixed, rng), detect)) EXPECT_TRUE(b);
  EXPECT_EQ(reduce_2rdq_to_etd(IntArray({7, 8, 7}), std::vector<RangePair>{{{1, 1}, {3, 3}}}, detect),
            std::vector<bool>{false});
  for (int rep = 0; rep < 200; ++rep) {
    const Index n = 2 + rng.below(50);
    const IntArray a = gen::array(n, 0, static_cast<Value>(n), rng);
    const auto qs = gen::pairs(n, 1 + rng.below(30), gen::Lengths::kMixed, rng);
    ASSERT_EQ(reduce_2rdq_to_etd(a, qs, detect), oracle_disjoint_batch(a, qs));
  }
}

}  // namespace
}  // namespace triq
