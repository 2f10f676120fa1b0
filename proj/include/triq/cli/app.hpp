#pragma once

// Command-line front end. run_cli is the whole program; tools/triq.cpp only
// forwards argv and the standard streams.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "triq/cli/bench.hpp"
#include "triq/cli/generate.hpp"
#include "triq/core/io.hpp"
#include "triq/core/oracles.hpp"
#include "triq/minmax/minmax.hpp"
#include "triq/reductions/range.hpp"
#include "triq/reductions/triangle.hpp"
#include "triq/solvers.hpp"
#include "triq/triangle/ayz.hpp"
#include "triq/triangle/detection.hpp"
#include "triq/triangle/output_sensitive.hpp"

namespace triq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::uint64_t seed = 0;
  double omega = 2.807;
  Index zeta = 128;
  unsigned threads = 1;
  std::string format = "text";
};

namespace detail {

// Answers of any query batch, widened to integers (2rdq: 1 = disjoint).
using Answers = std::vector<Value>;

inline Answers widen(const std::vector<bool>& v) {
  Answers out;
  out.reserve(v.size());
  for (bool b : v) out.push_back(b ? 1 : 0);
  return out;
}

inline void print_answers(std::ostream& out, const Answers& ans, const std::string& format) {
  if (format == "csv") {
    out << "index,answer\r\n";
    for (std::size_t i = 0; i < ans.size(); ++i) out << i + 1 << ',' << ans[i] << "\r\n";
    return;
  }
  for (Value v : ans) out << v << '\n';
}

inline void print_edge_values(std::ostream& out, const Graph& g, const Answers& vals, const std::string& format) {
  if (format == "csv") out << "u,v,value\r\n";
  for (Index e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edges()[e];
    if (format == "csv")
      out << ed.u + 1 << ',' << ed.v + 1 << ',' << vals[e] << "\r\n";
    else
      out << ed.u + 1 << ' ' << ed.v + 1 << ' ' << vals[e] << '\n';
  }
}

// First index (0-based) where the two streams differ, or nullopt.
inline std::optional<std::size_t> first_mismatch(const Answers& got, const Answers& want) {
  const std::size_t k = std::min(got.size(), want.size());
  for (std::size_t i = 0; i < k; ++i)
    if (got[i] != want[i]) return i;
  if (got.size() != want.size()) return k;
  return std::nullopt;
}

inline int report(std::ostream& out, const Answers& got, const Answers& want, const std::string& what,
                  const std::string& plural) {
  if (auto i = first_mismatch(got, want)) {
    out << "FAIL: first mismatch at " << what << ' ' << *i + 1;
    if (*i < got.size() && *i < want.size()) out << " (got " << got[*i] << ", expected " << want[*i] << ')';
    else out << " (got " << got.size() << " answers, expected " << want.size() << ')';
    out << '\n';
    return kExitVerifyFailed;
  }
  out << "PASS (" << want.size() << ' ' << (want.size() == 1 ? what : plural) << ")\n";
  return kExitOk;
}

inline Answers read_answers(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Answers out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    Value v;
    if (!(ls >> v)) {
      std::string rest;
      if (std::istringstream(line) >> rest) throw InputError("expected one integer", line_no);
      continue;
    }
    std::string extra;
    if (ls >> extra) throw InputError("expected one integer", line_no);
    out.push_back(v);
  }
  return out;
}

inline Problem require_problem(const std::string& s) {
  if (auto p = parse_problem(s)) return *p;
  throw InputError("unknown problem '" + s + "'");
}

inline Algo require_algo(const std::string& s) {
  if (auto a = parse_algo(s)) return *a;
  throw InputError("unknown algorithm '" + s + "'");
}

inline InnerSolver require_inner(const std::string& s) {
  if (s == "oracle") return InnerSolver::kOracle;
  if (s == "ayz") return InnerSolver::kAyz;
  throw InputError("unknown inner solver '" + s + "'");
}

struct RangeInstance {
  IntArray array;
  io::QueryFile queries;
};

inline RangeInstance load_range_instance(const std::string& array_path, const std::string& query_path, Problem p) {
  RangeInstance inst{io::read_array(array_path), {}};
  inst.queries = io::read_queries(query_path, inst.array.size());
  if (is_pair_problem(p) && !inst.queries.ranges.empty())
    throw InputError("problem '" + std::string(name_of(p)) + "' needs range-pair queries (4 integers per line)");
  if (!is_pair_problem(p) && !inst.queries.pairs.empty())
    throw InputError("problem '" + std::string(name_of(p)) + "' needs single-range queries (2 integers per line)");
  return inst;
}

inline Answers solve_range(Problem p, Algo algo, const SolveOptions& opt, const RangeInstance& inst) {
  if (p == Problem::k2Rdq) return widen(disjoint_solver(algo, opt)(inst.array, inst.queries.pairs));
  if (is_pair_problem(p)) return pair_solver(function_of(p), algo, opt)(inst.array, inst.queries.pairs);
  return range_solver(function_of(p), algo, opt)(inst.array, inst.queries.ranges);
}

// Ground truth straight from the oracles; never touches the solver under test.
inline Answers oracle_range(Problem p, const RangeInstance& inst) {
  if (p == Problem::k2Rdq) return widen(oracle_disjoint_batch(inst.array, inst.queries.pairs));
  if (is_pair_problem(p)) return oracle_pairs_batch<RangePair>(function_of(p), inst.array, inst.queries.pairs);
  return oracle_pairs_batch<Range>(function_of(p), inst.array, inst.queries.ranges);
}

inline Answers count_edges(const Graph& g, const std::string& algo, const SolveOptions& opt) {
  if (algo == "oracle") return oracle_edge_triangle_counts(g);
  if (algo == "ayz") return ayz_edge_counts(g, default_ayz_threshold(g.m()), opt.matmul);
  if (algo == "via-2req") return reduce_etc_to_2req(g, pair_solver(PairFunction::eqp(), Algo::kMo, opt));
  throw InputError("unknown counting algorithm '" + algo + "'");
}

inline Answers detect_edges(const Graph& g, const std::string& algo, const SolveOptions& opt, std::uint64_t seed,
                            std::ostream& err) {
  if (algo == "oracle") return widen(oracle_edge_triangle_detection(g));
  if (algo == "ayz") return widen(detect_solver(InnerSolver::kAyz)(g));
  if (algo == "via-2rdq") return widen(reduce_etd_to_2rdq(g, disjoint_solver(Algo::kMo, opt)));
  if (algo == "via-listing") {
    const DetectionResult r = detect_via_listing(g, baseline_lister(), RandomSource(seed));
    if (r.status != ListingStatus::kComplete) {
      err << "detect: restart cap reached after " << r.restarts << " restarts\n";
      throw Error("detection did not complete");
    }
    return widen(r.detected);
  }
  throw InputError("unknown detection algorithm '" + algo + "'");
}

inline ListingResult list_triangles(const Graph& g, Index t, const std::string& algo, const GlobalOptions& glob) {
  if (algo == "baseline") return baseline_list(g, t);
  if (algo == "via-detection") {
    ListingResult r = list_via_detection(g, oracle_detect_solver());
    if (r.triangles.size() > t) {
      r.triangles.resize(t);
      r.status = ListingStatus::kTruncated;
    }
    return r;
  }
  if (algo == "main") {
    InnerListingOptions opt;
    opt.zeta = glob.zeta;
    opt.threads = glob.threads;
    return main_listing_with_retries(g, static_cast<Value>(t), RandomSource(glob.seed), 10, opt);
  }
  throw InputError("unknown listing algorithm '" + algo + "'");
}

inline DenseMatrix minmax_with(const DenseMatrix& a, const DenseMatrix& b, const std::string& solver,
                               const SolveOptions& opt) {
  if (solver == "oracle") return oracle_minmax(a, b);
  if (solver == "via-2rdq") return minmax_product(a, b, oracle_disjoint_solver());
  if (solver == "via-etd") return minmax_product(a, b, disjoint_solver(Algo::kViaTriangle, opt));
  throw InputError("unknown minmax solver '" + solver + "'");
}

// Reduction from `from` to `to`: answers `from` queries using a `to` solver
// built with `algo` (oracle by default).
inline Answers reduce(const std::string& from, const std::string& to, Algo algo, const SolveOptions& opt,
                      const RangeInstance& inst) {
  const auto& a = inst.array;
  const auto& pairs = inst.queries.pairs;
  const auto& ranges = inst.queries.ranges;
  const PairFunction inv = PairFunction::inv(), eqp = PairFunction::eqp();
  if (from == "2riq" && to == "riq") return reduce_2r_to_1r(range_solver(inv, algo, opt))(a, pairs);
  if (from == "2req" && to == "req") return reduce_2r_to_1r(range_solver(eqp, algo, opt))(a, pairs);
  if (from == "riq" && to == "2riq") return reduce_1r_to_2r(inv, pair_solver(inv, algo, opt))(a, ranges);
  if (from == "req" && to == "2req") return reduce_1r_to_2r(eqp, pair_solver(eqp, algo, opt))(a, ranges);
  if (from == "2riq" && to == "2req") return reduce_inv_to_eqp(pair_solver(eqp, algo, opt))(a, pairs);
  if (from == "2req" && to == "2riq") return reduce_eqp_to_inv(pair_solver(inv, algo, opt))(a, pairs);
  if (from == "2req" && to == "etc") return reduce_2req_to_etc(a, pairs, count_solver(opt.inner), opt.threads);
  if (from == "2rdq" && to == "etd") return widen(reduce_2rdq_to_etd(a, pairs, detect_solver(opt.inner)));
  throw InputError("no reduction from '" + from + "' to '" + to + "'");
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace detail

[[nodiscard]] inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Range-pair queries, edge-triangle problems and the reductions between them"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions glob;
  app.add_option("--seed", glob.seed, "seed for every randomized step")->capture_default_str();
  app.add_option("--omega", glob.omega, "matrix multiplication exponent used for block sizes")
      ->check(CLI::Range(2.0, 3.0))
      ->capture_default_str();
  app.add_option("--zeta", glob.zeta, "listing threshold factor")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--threads", glob.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", glob.format, "output format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();

  auto solve_options = [&](const std::string& inner = "oracle") {
    SolveOptions o;
    o.omega = glob.omega;
    o.threads = glob.threads;
    o.inner = detail::require_inner(inner);
    return o;
  };

  std::function<int()> action;

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->require_subcommand(1);
  std::string out_path;
  gen->add_option("--out", out_path, "write to FILE instead of stdout");
  auto emit = [&](auto&& write) {
    if (out_path.empty()) {
      write(out);
      return kExitOk;
    }
    std::ofstream f(out_path);
    if (!f) throw InputError("cannot write '" + out_path + "'");
    write(f);
    return kExitOk;
  };

  Index gen_n = 0, gen_q = 0, gen_rows = 0, gen_cols = 0, gen_m = 0, gen_left = 0, gen_right = 0;
  std::optional<Value> gen_lo, gen_hi;
  bool gen_pairs = false;
  std::string gen_lengths = "mixed", gen_kind = "gnp";
  double gen_p = 0.1, gen_exponent = 2.5;

  auto* gen_array = gen->add_subcommand("array", "random integer array");
  gen_array->add_option("--n", gen_n, "length")->required()->check(CLI::PositiveNumber);
  gen_array->add_option("--lo", gen_lo, "smallest value (default 0)");
  gen_array->add_option("--hi", gen_hi, "largest value (default n-1)");
  gen_array->callback([&] {
    action = [&] {
      RandomSource rng(glob.seed);
      const Value lo = gen_lo.value_or(0), hi = gen_hi.value_or(static_cast<Value>(gen_n) - 1);
      const IntArray a = gen::array(gen_n, lo, hi, rng);
      return emit([&](std::ostream& o) { io::write_array(o, a.values()); });
    };
  });

  auto* gen_queries = gen->add_subcommand("queries", "random ranges or range pairs");
  gen_queries->add_option("--n", gen_n, "array length")->required()->check(CLI::PositiveNumber);
  gen_queries->add_option("--q", gen_q, "number of queries")->required();
  gen_queries->add_flag("--pairs", gen_pairs, "emit nonoverlapping range pairs");
  gen_queries->add_option("--lengths", gen_lengths, "range length profile")
      ->check(CLI::IsMember({"uniform", "short", "long", "mixed"}))
      ->capture_default_str();
  gen_queries->callback([&] {
    action = [&] {
      RandomSource rng(glob.seed);
      const auto kind = gen::parse_lengths(gen_lengths);
      if (gen_pairs) {
        const auto qs = gen::pairs(gen_n, gen_q, kind, rng);
        return emit([&](std::ostream& o) { io::write_queries(o, std::span<const RangePair>(qs)); });
      }
      const auto qs = gen::ranges(gen_n, gen_q, kind, rng);
      return emit([&](std::ostream& o) { io::write_queries(o, std::span<const Range>(qs)); });
    };
  });

  auto* gen_graph = gen->add_subcommand("graph", "random or structured graph");
  gen_graph->add_option("--kind", gen_kind, "graph family")
      ->check(CLI::IsMember({"gnp", "powerlaw", "complete", "cycle", "bipartite", "star"}))
      ->capture_default_str();
  gen_graph->add_option("--n", gen_n, "vertices (star: leaves)");
  gen_graph->add_option("--p", gen_p, "edge probability (gnp, bipartite)")->capture_default_str();
  gen_graph->add_option("--m", gen_m, "expected edges (powerlaw)");
  gen_graph->add_option("--exponent", gen_exponent, "degree exponent (powerlaw)")->capture_default_str();
  gen_graph->add_option("--left", gen_left, "left side (bipartite)");
  gen_graph->add_option("--right", gen_right, "right side (bipartite)");
  gen_graph->callback([&] {
    action = [&] {
      RandomSource rng(glob.seed);
      Graph g(0, {});
      if (gen_kind == "gnp") g = gen::gnp(gen_n, gen_p, rng);
      if (gen_kind == "powerlaw") g = gen::power_law(gen_n, gen_m, gen_exponent, rng);
      if (gen_kind == "complete") g = gen::complete(gen_n);
      if (gen_kind == "cycle") g = gen::cycle(gen_n);
      if (gen_kind == "star") g = gen::star(gen_n);
      if (gen_kind == "bipartite") g = gen::bipartite(gen_left, gen_right, gen_p, rng);
      return emit([&](std::ostream& o) { io::write_graph(o, g); });
    };
  });

  auto* gen_matrix = gen->add_subcommand("matrix", "random integer matrix");
  gen_matrix->add_option("--rows", gen_rows, "rows")->required()->check(CLI::PositiveNumber);
  gen_matrix->add_option("--cols", gen_cols, "columns (default rows)");
  gen_matrix->add_option("--lo", gen_lo, "smallest entry (default -50)");
  gen_matrix->add_option("--hi", gen_hi, "largest entry (default 50)");
  gen_matrix->callback([&] {
    action = [&] {
      RandomSource rng(glob.seed);
      const DenseMatrix m = gen::matrix(gen_rows, gen_cols ? gen_cols : gen_rows, gen_lo.value_or(-50),
                                        gen_hi.value_or(50), rng);
      return emit([&](std::ostream& o) { io::write_matrix(o, m); });
    };
  });

  // Shared instance flags.
  std::string problem, algo = "mo", inner = "oracle", array_path, query_path, graph_path, answers_path;

  auto* solve = app.add_subcommand("solve", "answer range queries");
  solve->add_option("--problem", problem)->required()->check(CLI::IsMember({"riq", "req", "2riq", "2req", "2rdq"}));
  solve->add_option("--algo", algo)
      ->check(CLI::IsMember({"mo", "mo-online", "online-eq", "via-triangle", "oracle"}))
      ->capture_default_str();
  solve->add_option("--array", array_path)->required();
  solve->add_option("--queries", query_path)->required();
  solve->add_option("--inner", inner, "triangle solver behind via-triangle")
      ->check(CLI::IsMember({"oracle", "ayz"}))
      ->capture_default_str();
  solve->callback([&] {
    action = [&] {
      const Problem p = detail::require_problem(problem);
      const auto inst = detail::load_range_instance(array_path, query_path, p);
      detail::print_answers(out, detail::solve_range(p, detail::require_algo(algo), solve_options(inner), inst),
                            glob.format);
      return kExitOk;
    };
  });

  std::string from, to;
  bool verify_flag = false;
  std::string reduce_algo = "oracle";
  auto* reduce = app.add_subcommand("reduce", "answer queries through a reduction");
  reduce->add_option("--from", from, "source problem")->required();
  reduce->add_option("--to", to, "target problem")->required();
  reduce->add_option("--algo", reduce_algo, "solver for the target problem")->capture_default_str();
  reduce->add_option("--inner", inner)->check(CLI::IsMember({"oracle", "ayz"}))->capture_default_str();
  reduce->add_option("--array", array_path)->required();
  reduce->add_option("--queries", query_path)->required();
  reduce->add_flag("--verify", verify_flag, "compare with the source oracle");
  reduce->callback([&] {
    action = [&] {
      const Problem p = detail::require_problem(from);
      const auto inst = detail::load_range_instance(array_path, query_path, p);
      const auto got = detail::reduce(from, to, detail::require_algo(reduce_algo), solve_options(inner), inst);
      detail::print_answers(out, got, glob.format);
      if (!verify_flag) return kExitOk;
      return detail::report(out, got, detail::oracle_range(p, inst), "query", "queries");
    };
  });

  Index t_arg = 0;
  auto* count = app.add_subcommand("count", "triangles through every edge");
  count->add_option("--graph", graph_path)->required();
  count->add_option("--algo", algo)->check(CLI::IsMember({"oracle", "ayz", "via-2req"}))->required();
  count->callback([&] {
    action = [&] {
      const Graph g = io::read_graph(graph_path);
      detail::print_edge_values(out, g, detail::count_edges(g, algo, solve_options()), glob.format);
      return kExitOk;
    };
  });

  auto* detect = app.add_subcommand("detect", "whether every edge lies on a triangle");
  detect->add_option("--graph", graph_path)->required();
  detect->add_option("--algo", algo)->check(CLI::IsMember({"oracle", "ayz", "via-listing", "via-2rdq"}))->required();
  detect->callback([&] {
    action = [&] {
      const Graph g = io::read_graph(graph_path);
      detail::print_edge_values(out, g, detail::detect_edges(g, algo, solve_options(), glob.seed, err), glob.format);
      return kExitOk;
    };
  });

  auto* list = app.add_subcommand("list", "list up to t triangles");
  list->add_option("--graph", graph_path)->required();
  list->add_option("--t", t_arg, "how many triangles to list")->required()->check(CLI::PositiveNumber);
  list->add_option("--algo", algo)->check(CLI::IsMember({"baseline", "via-detection", "main"}))->required();
  list->callback([&] {
    action = [&] {
      const Graph g = io::read_graph(graph_path);
      const ListingResult r = detail::list_triangles(g, t_arg, algo, glob);
      io::write_triangles(out, r.triangles);
      if (r.status == ListingStatus::kFailed) {
        err << "list: failed after retries\n";
        return kExitVerifyFailed;
      }
      return kExitOk;
    };
  });

  std::string a_path, b_path, mm_solver = "oracle";
  auto* minmax = app.add_subcommand("minmax", "(min,max)-product of two square matrices");
  minmax->add_option("--a", a_path)->required();
  minmax->add_option("--b", b_path)->required();
  minmax->add_option("--solver", mm_solver)
      ->check(CLI::IsMember({"oracle", "via-2rdq", "via-etd"}))
      ->capture_default_str();
  minmax->add_option("--inner", inner)->check(CLI::IsMember({"oracle", "ayz"}))->capture_default_str();
  minmax->callback([&] {
    action = [&] {
      const DenseMatrix a = io::read_matrix(a_path), b = io::read_matrix(b_path);
      io::write_matrix(out, detail::minmax_with(a, b, mm_solver, solve_options(inner)));
      return kExitOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "check an algorithm or an answer file against the oracle");
  verify->add_option("--problem", problem, "riq, req, 2riq, 2req, 2rdq, etc or etd")
      ->required()
      ->check(CLI::IsMember({"riq", "req", "2riq", "2req", "2rdq", "etc", "etd"}));
  verify->add_option("--algo", algo, "algorithm under test")->capture_default_str();
  verify->add_option("--inner", inner)->check(CLI::IsMember({"oracle", "ayz"}))->capture_default_str();
  verify->add_option("--array", array_path);
  verify->add_option("--queries", query_path);
  verify->add_option("--graph", graph_path);
  verify->add_option("--answers", answers_path, "check this answer file instead of running --algo");
  verify->callback([&] {
    action = [&]() -> int {
      if (problem == "etc" || problem == "etd") {
        if (graph_path.empty()) throw InputError("--graph is required for " + problem);
        const Graph g = io::read_graph(graph_path);
        const auto want = problem == "etc" ? oracle_edge_triangle_counts(g)
                                           : detail::widen(oracle_edge_triangle_detection(g));
        const auto got = !answers_path.empty() ? detail::read_answers(answers_path)
                         : problem == "etc"    ? detail::count_edges(g, algo, solve_options(inner))
                                               : detail::detect_edges(g, algo, solve_options(inner), glob.seed, err);
        return detail::report(out, got, want, "edge", "edges");
      }
      if (array_path.empty() || query_path.empty()) throw InputError("--array and --queries are required");
      const Problem p = detail::require_problem(problem);
      const auto inst = detail::load_range_instance(array_path, query_path, p);
      const auto want = detail::oracle_range(p, inst);
      const auto got = !answers_path.empty()
                           ? detail::read_answers(answers_path)
                           : detail::solve_range(p, detail::require_algo(algo), solve_options(inner), inst);
      return detail::report(out, got, want, "query", "queries");
    };
  });

  bench::BenchConfig bcfg;
  auto* bench_cmd = app.add_subcommand("bench", "benchmark matrix; always CSV");
  bench_cmd->add_option("--problems", bcfg.problems, "riq req 2riq 2req 2rdq etc etd list minmax")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--algos", bcfg.algorithms, "algorithms; invalid (problem, algo) cells are skipped")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--sizes", bcfg.sizes, "instance sizes n")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--reps", bcfg.repetitions)->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--q", bcfg.q, "queries per instance (0: q = n)")->capture_default_str();
  bench_cmd->add_option("--density", bcfg.density, "edge probability for graph problems")->capture_default_str();
  bench_cmd->add_option("--t-factor", bcfg.t_factor, "list: t = factor * m")->capture_default_str();
  bench_cmd->add_option("--budget-mb", bcfg.budget_mb, "per-cell memory budget")->capture_default_str();
  bench_cmd->callback([&] {
    action = [&] {
      bcfg.seed = glob.seed;
      bcfg.threads = glob.threads;
      bcfg.zeta = glob.zeta;
      bcfg.solve = solve_options();
      const auto rows = bench::run(bcfg);
      bench::write_header(out);
      for (const auto& r : rows) bench::write_row(out, r);
      return kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (!action) return kExitUsage;
  return detail::guarded(err, action);
}

}  // namespace triq::cli
