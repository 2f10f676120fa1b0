#pragma once

// (problem, algorithm) -> batch solver. Problems an algorithm does not
// solve directly are routed through the reductions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triq/core/oracle_solvers.hpp"
#include "triq/rangequery/mo.hpp"
#include "triq/rangequery/mo_online.hpp"
#include "triq/rangequery/online_eq.hpp"
#include "triq/reductions/range.hpp"
#include "triq/reductions/triangle.hpp"
#include "triq/triangle/ayz.hpp"

namespace triq {

enum class Problem { kRiq, kReq, k2Riq, k2Req, k2Rdq };
enum class Algo { kMo, kMoOnline, kOnlineEq, kViaTriangle, kOracle };
enum class InnerSolver { kOracle, kAyz };

inline constexpr std::string_view kProblemNames[] = {"riq", "req", "2riq", "2req", "2rdq"};
inline constexpr std::string_view kAlgoNames[] = {"mo", "mo-online", "online-eq", "via-triangle", "oracle"};

[[nodiscard]] inline std::string_view name_of(Problem p) { return kProblemNames[static_cast<int>(p)]; }
[[nodiscard]] inline std::string_view name_of(Algo a) { return kAlgoNames[static_cast<int>(a)]; }

[[nodiscard]] inline std::optional<Problem> parse_problem(std::string_view s) {
  for (int i = 0; i < 5; ++i)
    if (kProblemNames[i] == s) return static_cast<Problem>(i);
  return std::nullopt;
}
[[nodiscard]] inline std::optional<Algo> parse_algo(std::string_view s) {
  for (int i = 0; i < 5; ++i)
    if (kAlgoNames[i] == s) return static_cast<Algo>(i);
  return std::nullopt;
}

[[nodiscard]] inline bool is_pair_problem(Problem p) { return p != Problem::kRiq && p != Problem::kReq; }

struct SolveOptions {
  double omega = 2.807;
  MatmulAlgo matmul = MatmulAlgo::kStrassen;
  InnerSolver inner = InnerSolver::kOracle;
  unsigned threads = 1;
};

[[nodiscard]] inline EdgeCountSolver count_solver(InnerSolver inner) {
  if (inner == InnerSolver::kOracle) return oracle_count_solver();
  return [](const Graph& g) { return ayz_edge_counts(g, default_ayz_threshold(g.m())); };
}

[[nodiscard]] inline EdgeDetectSolver detect_solver(InnerSolver inner) {
  if (inner == InnerSolver::kOracle) return oracle_detect_solver();
  return [](const Graph& g) {
    std::vector<bool> out;
    for (Value c : ayz_edge_counts(g, default_ayz_threshold(g.m()))) out.push_back(c > 0);
    return out;
  };
}

// Solver for req (eqp) or riq (inv) on single ranges.
[[nodiscard]] RangeSolver range_solver(const PairFunction& f, Algo algo, const SolveOptions& opt = {});
// Solver for 2req (eqp) or 2riq (inv) on range pairs.
[[nodiscard]] PairSolver pair_solver(const PairFunction& f, Algo algo, const SolveOptions& opt = {});

namespace detail {

inline OnlineEqOptions online_options(const SolveOptions& opt) {
  OnlineEqOptions o;
  o.omega = opt.omega;
  o.algo = opt.matmul;
  return o;
}

}  // namespace detail

inline RangeSolver range_solver(const PairFunction& f, Algo algo, const SolveOptions& opt) {
  switch (algo) {
    case Algo::kOracle:
      return oracle_range_solver(f);
    case Algo::kMo:
      return [f](const IntArray& a, std::span<const Range> qs) { return mo_offline(f, a, qs); };
    case Algo::kMoOnline:
      return [f](const IntArray& a, std::span<const Range> qs) { return mo_online_batch(f, a, qs); };
    case Algo::kOnlineEq:
      if (f.kind() == PairKind::kEqp) {
        return [o = detail::online_options(opt)](const IntArray& a, std::span<const Range> qs) {
          return online_eq_batch(a, qs, o);
        };
      }
      // riq -> 2riq -> 2req -> req
      return reduce_1r_to_2r(f, pair_solver(f, algo, opt));
    case Algo::kViaTriangle:
      return reduce_1r_to_2r(f, pair_solver(f, algo, opt));
  }
  throw CapabilityError("unknown algorithm");
}

inline PairSolver pair_solver(const PairFunction& f, Algo algo, const SolveOptions& opt) {
  if (f.kind() != PairKind::kEqp && f.kind() != PairKind::kInv && algo != Algo::kOracle) {
    throw CapabilityError("no solver chain for pair function '" + f.name() + "'");
  }
  switch (algo) {
    case Algo::kOracle:
      return oracle_pair_solver(f);
    case Algo::kMo:
    case Algo::kMoOnline:
      return reduce_2r_to_1r(range_solver(f, algo, opt));
    case Algo::kOnlineEq:
      if (f.kind() == PairKind::kEqp) return reduce_2r_to_1r(range_solver(f, algo, opt));
      return reduce_inv_to_eqp(pair_solver(PairFunction::eqp(), algo, opt));
    case Algo::kViaTriangle: {
      if (f.kind() == PairKind::kInv) return reduce_inv_to_eqp(pair_solver(PairFunction::eqp(), algo, opt));
      return [inner = count_solver(opt.inner), threads = opt.threads](const IntArray& a,
                                                                    std::span<const RangePair> qs) {
        return reduce_2req_to_etc(a, qs, inner, threads);
      };
    }
  }
  throw CapabilityError("unknown algorithm");
}

// 2rdq: disjoint iff the 2req answer is zero, except via-triangle, which
// uses the boolean chain.
[[nodiscard]] inline DisjointSolver disjoint_solver(Algo algo, const SolveOptions& opt = {}) {
  if (algo == Algo::kOracle) return oracle_disjoint_solver();
  if (algo == Algo::kViaTriangle) {
    return [inner = detect_solver(opt.inner)](const IntArray& a, std::span<const RangePair> qs) {
      return reduce_2rdq_to_etd(a, qs, inner);
    };
  }
  return [eqp = pair_solver(PairFunction::eqp(), algo, opt)](const IntArray& a, std::span<const RangePair> qs) {
    std::vector<bool> out;
    for (Value v : eqp(a, qs)) out.push_back(v == 0);
    return out;
  };
}

[[nodiscard]] inline PairFunction function_of(Problem p) {
  return p == Problem::kRiq || p == Problem::k2Riq ? PairFunction::inv() : PairFunction::eqp();
}

}  // namespace triq
