#pragma once

// Benchmark harness: one CSV row per (problem, algorithm, size, repetition).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "triq/cli/generate.hpp"
#include "triq/core/counters.hpp"
#include "triq/core/parallel.hpp"
#include "triq/minmax/minmax.hpp"
#include "triq/reductions/triangle.hpp"
#include "triq/solvers.hpp"
#include "triq/triangle/ayz.hpp"
#include "triq/triangle/detection.hpp"
#include "triq/triangle/output_sensitive.hpp"

namespace triq::bench {

struct BenchRecord {
  std::string problem;
  std::string algorithm;
  Index n = 0;
  Index m = 0;
  Index q = 0;
  Index t = 0;
  std::uint64_t seed = 0;
  std::uint64_t wall_ns = 0;
  std::uint64_t extender_steps = 0;
  std::uint64_t matmul_calls = 0;
  std::uint64_t inner_solver_calls = 0;
  std::string status = "ok";  // "ok" or "skipped: <reason>"
};

inline constexpr const char* kColumns[] = {"problem", "algorithm",     "n",            "m",
                                           "q",       "t",             "seed",         "wall_ns",
                                           "extender_steps", "matmul_calls", "inner_solver_calls", "status"};

// RFC 4180: quote fields containing a comma, quote or line break.
[[nodiscard]] inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_header(std::ostream& out) {
  for (std::size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
  out << "\r\n";
}

inline void write_row(std::ostream& out, const BenchRecord& r) {
  out << csv_field(r.problem) << ',' << csv_field(r.algorithm) << ',' << r.n << ',' << r.m << ',' << r.q << ','
      << r.t << ',' << r.seed << ',' << r.wall_ns << ',' << r.extender_steps << ',' << r.matmul_calls << ','
      << r.inner_solver_calls << ',' << csv_field(r.status) << "\r\n";
}

struct BenchConfig {
  std::vector<std::string> problems{"req"};
  std::vector<std::string> algorithms{"mo"};
  std::vector<Index> sizes{256};
  Index repetitions = 1;
  std::uint64_t seed = 0;
  Index q = 0;              // 0 means q = n
  double density = 0.1;     // G(n, p) for graph problems
  Index t_factor = 1;       // list: t = t_factor * m
  double budget_mb = 1024;  // per cell
  unsigned threads = 1;
  SolveOptions solve;
  Index zeta = 128;
};

inline const std::vector<std::string>& algorithms_for(const std::string& problem) {
  static const std::vector<std::string> range{"mo", "mo-online", "online-eq", "via-triangle", "oracle"};
  static const std::vector<std::string> etc{"oracle", "ayz", "via-2req"};
  static const std::vector<std::string> etd{"oracle", "ayz", "via-listing", "via-2rdq"};
  static const std::vector<std::string> list{"baseline", "via-detection", "main"};
  static const std::vector<std::string> minmax{"oracle", "via-2rdq", "via-etd"};
  static const std::vector<std::string> none;
  if (parse_problem(problem)) return range;
  if (problem == "etc") return etc;
  if (problem == "etd") return etd;
  if (problem == "list") return list;
  if (problem == "minmax") return minmax;
  return none;
}

// Rough peak memory of one cell in MB, used only to skip oversized cells.
[[nodiscard]] inline double estimate_mb(const std::string& problem, const std::string& algo, Index n, Index q) {
  const double nd = static_cast<double>(n), qd = static_cast<double>(std::max<Index>(q, 1));
  const double lg = std::log2(std::max(nd, 2.0));
  double bytes = 64 * nd;
  if (problem == "minmax") {
    bytes = 64 * nd * nd;
  } else if (problem == "etc" || problem == "etd" || problem == "list") {
    bytes = 64 * nd * nd;
  } else if (algo == "mo-online") {
    bytes = nd * std::sqrt(qd) * (16 + 24 * lg) * (problem[0] == '2' ? 2 : 1);
  } else if (algo == "online-eq") {
    bytes = 4 * 8 * nd * nd / std::sqrt(qd) + 64 * nd;
  } else if (algo == "via-triangle") {
    bytes = 48 * (2 * nd * (lg + 1) + qd * 4 * lg * lg) * (problem == "riq" || problem == "2riq" ? lg : 1);
  } else if (algo == "oracle") {
    bytes = 16 * (nd + qd);
  }
  return bytes / (1024.0 * 1024.0);
}

namespace detail {

template <typename Fn>
void timed(BenchRecord& rec, Fn&& fn) {
  reset_counters();
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  rec.wall_ns = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  rec.extender_steps = counters().extender_steps;
  rec.matmul_calls = counters().matmul_calls;
  rec.inner_solver_calls = counters().inner_solver_calls;
}

inline void run_cell(const BenchConfig& cfg, BenchRecord& rec) {
  RandomSource rng(rec.seed);
  const std::string& p = rec.problem;
  const std::string& algo = rec.algorithm;
  volatile std::size_t sink = 0;

  if (auto problem = parse_problem(p)) {
    rec.q = cfg.q ? cfg.q : rec.n;
    const IntArray a = gen::array(rec.n, 0, static_cast<Value>(rec.n) - 1, rng);
    const Algo al = *parse_algo(algo);
    if (*problem == Problem::k2Rdq) {
      const auto qs = gen::pairs(rec.n, rec.q, gen::Lengths::kMixed, rng);
      const DisjointSolver solver = disjoint_solver(al, cfg.solve);
      timed(rec, [&] { sink = solver(a, qs).size(); });
    } else if (is_pair_problem(*problem)) {
      const auto qs = gen::pairs(rec.n, rec.q, gen::Lengths::kMixed, rng);
      const PairSolver solver = pair_solver(function_of(*problem), al, cfg.solve);
      timed(rec, [&] { sink = solver(a, qs).size(); });
    } else {
      const auto qs = gen::ranges(rec.n, rec.q, gen::Lengths::kMixed, rng);
      const RangeSolver solver = range_solver(function_of(*problem), al, cfg.solve);
      timed(rec, [&] { sink = solver(a, qs).size(); });
    }
    return;
  }

  if (p == "minmax") {
    const DenseMatrix x = gen::matrix(rec.n, rec.n, -50, 50, rng);
    const DenseMatrix y = gen::matrix(rec.n, rec.n, -50, 50, rng);
    rec.q = rec.n * rec.n;
    timed(rec, [&] {
      if (algo == "oracle") {
        sink = oracle_minmax(x, y).rows();
      } else {
        const DisjointSolver d = algo == "via-2rdq" ? oracle_disjoint_solver()
                                                    : disjoint_solver(Algo::kViaTriangle, cfg.solve);
        sink = minmax_product(x, y, d).rows();
      }
    });
    return;
  }

  const Graph g = gen::gnp(rec.n, cfg.density, rng);
  rec.m = g.m();
  if (p == "etc") {
    timed(rec, [&] {
      if (algo == "oracle") sink = oracle_edge_triangle_counts(g).size();
      if (algo == "ayz") sink = ayz_edge_counts(g, default_ayz_threshold(g.m()), cfg.solve.matmul).size();
      if (algo == "via-2req") sink = reduce_etc_to_2req(g, pair_solver(PairFunction::eqp(), Algo::kMo)).size();
    });
  } else if (p == "etd") {
    timed(rec, [&] {
      if (algo == "oracle") sink = oracle_edge_triangle_detection(g).size();
      if (algo == "ayz") sink = detect_solver(InnerSolver::kAyz)(g).size();
      if (algo == "via-listing") sink = detect_via_listing(g, baseline_lister(), rng.split(1)).detected.size();
      if (algo == "via-2rdq") sink = reduce_etd_to_2rdq(g, disjoint_solver(Algo::kMo)).size();
    });
  } else if (p == "list") {
    rec.t = cfg.t_factor * std::max<Index>(g.m(), 1);
    InnerListingOptions opt;
    opt.zeta = cfg.zeta;
    timed(rec, [&] {
      if (algo == "baseline") sink = baseline_list(g, rec.t).triangles.size();
      if (algo == "via-detection") sink = list_via_detection(g, oracle_detect_solver()).triangles.size();
      if (algo == "main") sink = main_listing(g, static_cast<Value>(rec.t), rng.split(1), opt).triangles.size();
    });
  }
  (void)sink;
}

}  // namespace detail

// Runs every valid (problem, algorithm, size) cell `repetitions` times.
// Rows come back sorted by (problem, algorithm, size, repetition) whatever
// the thread count. Repetition k of a cell uses seed mix(seed + k).
[[nodiscard]] inline std::vector<BenchRecord> run(const BenchConfig& cfg) {
  struct Cell {
    std::string problem, algo;
    Index n, rep;
  };
  std::vector<Cell> cells;
  for (const auto& p : cfg.problems) {
    const auto& valid = algorithms_for(p);
    if (valid.empty()) throw InputError("unknown bench problem '" + p + "'");
    for (const auto& a : cfg.algorithms) {
      if (std::find(valid.begin(), valid.end(), a) == valid.end()) continue;
      for (Index n : cfg.sizes)
        for (Index r = 0; r < cfg.repetitions; ++r) cells.push_back({p, a, n, r});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
    return std::tie(x.problem, x.algo, x.n, x.rep) < std::tie(y.problem, y.algo, y.n, y.rep);
  });

  std::vector<BenchRecord> rows(cells.size());
  parallel_for(cells.size(), cfg.threads, [&](std::size_t i) {
    const Cell& c = cells[i];
    BenchRecord& rec = rows[i];
    rec.problem = c.problem;
    rec.algorithm = c.algo;
    rec.n = c.n;
    rec.seed = RandomSource::mix(cfg.seed + c.rep);
    const double need = estimate_mb(c.problem, c.algo, c.n, cfg.q ? cfg.q : c.n);
    if (need > cfg.budget_mb) {
      rec.status = "skipped: estimated " + std::to_string(static_cast<long long>(std::ceil(need))) +
                   " MB exceeds budget";
      return;
    }
    try {
      detail::run_cell(cfg, rec);
    } catch (const std::exception& e) {
      rec.status = std::string("skipped: ") + e.what();
    }
  });
  return rows;
}

}  // namespace triq::bench
