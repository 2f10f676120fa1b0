#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "triq/cli/app.hpp"

namespace triq::cli {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "triq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("triq_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path(name)) << content;
    return path(name);
  }

  std::string gen(std::vector<std::string> args, const std::string& name) const {
    args.insert(args.begin(), "gen");
    args.push_back("--out");
    args.push_back(path(name));
    const CliResult r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return path(name);
  }

  fs::path dir_;
};

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST_F(Cli, GenCompleteGraph) {
  const CliResult r = run({"gen", "graph", "--kind", "complete", "--n", "4"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.front(), "4 6");
  EXPECT_EQ(ls.size(), 7u);
}

TEST_F(Cli, GenEmptyQueries) {
  const CliResult r = run({"gen", "queries", "--n", "5", "--q", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
}

TEST_F(Cli, GenIsDeterministic) {
  for (const std::string kind : {"gnp", "powerlaw", "bipartite"}) {
    std::vector<std::string> args{"--seed", "9", "gen", "graph", "--kind", kind, "--n", "30", "--m", "60",
                                  "--left", "10", "--right", "12", "--p", "0.3"};
    EXPECT_EQ(run(args).out, run(args).out);
  }
  const std::vector<std::string> q{"--seed", "4", "gen", "queries", "--n", "20", "--q", "15", "--pairs"};
  EXPECT_EQ(run(q).out, run(q).out);
  EXPECT_NE(run(q).out, run({"--seed", "5", "gen", "queries", "--n", "20", "--q", "15", "--pairs"}).out);
}

TEST_F(Cli, GeneratedPairsAreValid) {
  const std::string a = gen({"array", "--n", "40"}, "a.txt");
  const std::string q = gen({"queries", "--n", "40", "--q", "50", "--pairs"}, "q.txt");
  EXPECT_NO_THROW((void)io::read_queries(q, 40));
  EXPECT_EQ(io::read_array(a).size(), 40u);
}

TEST_F(Cli, GenUsageErrors) {
  EXPECT_EQ(run({"gen", "array"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "graph", "--kind", "complete", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "queries", "--n", "5", "--q", "2", "--lengths", "tiny"}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "gen", "array", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
}

TEST_F(Cli, SolvePrintsAnswersInOrder) {
  const std::string a = write("a.txt", "5\n1 2 1 2 1\n");
  const std::string q = write("q.txt", "1 5\n2 4\n");
  for (const std::string algo : {"mo", "mo-online", "online-eq", "via-triangle", "oracle"}) {
    const CliResult r = run({"solve", "--problem", "req", "--algo", algo, "--array", a, "--queries", q});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "4\n1\n") << algo;
  }
  const CliResult csv = run({"--format", "csv", "solve", "--problem", "req", "--array", a, "--queries", q});
  EXPECT_EQ(csv.out, "index,answer\r\n1,4\r\n2,1\r\n");
}

TEST_F(Cli, SolveInputErrors) {
  const std::string a = write("a.txt", "3\n1 2 x\n");
  const std::string q = write("q.txt", "1 2\n");
  CliResult r = run({"solve", "--problem", "req", "--array", a, "--queries", q});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  const std::string good = write("b.txt", "3\n1 2 3\n");
  r = run({"solve", "--problem", "2req", "--array", good, "--queries", q});
  EXPECT_EQ(r.code, kExitUsage);
  r = run({"solve", "--problem", "req", "--array", good, "--queries", path("missing.txt")});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST_F(Cli, ReduceWithVerify) {
  const std::string a = gen({"array", "--n", "30", "--hi", "6"}, "a.txt");
  const std::string p = gen({"queries", "--n", "30", "--q", "20", "--pairs"}, "p.txt");
  const std::string s = gen({"queries", "--n", "30", "--q", "20"}, "s.txt");
  const std::vector<std::array<std::string, 3>> cases{{"2riq", "riq", "p"}, {"2req", "req", "p"},
                                                      {"riq", "2riq", "s"}, {"req", "2req", "s"},
                                                      {"2riq", "2req", "p"}, {"2req", "2riq", "p"},
                                                      {"2req", "etc", "p"},  {"2rdq", "etd", "p"}};
  for (const auto& [from, to, file] : cases) {
    const CliResult r = run({"reduce", "--from", from, "--to", to, "--array", a, "--queries", file == "p" ? p : s,
                       "--verify"});
    EXPECT_EQ(r.code, 0) << from << "->" << to << ": " << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
  }
  EXPECT_EQ(run({"reduce", "--from", "riq", "--to", "etc", "--array", a, "--queries", s}).code, kExitUsage);
}

TEST_F(Cli, VerifyPassesAndReportsFirstMismatch) {
  const std::string a = gen({"array", "--n", "25", "--hi", "4"}, "a.txt");
  const std::string q = gen({"queries", "--n", "25", "--q", "12", "--pairs"}, "q.txt");
  CliResult r = run({"verify", "--problem", "2riq", "--algo", "online-eq", "--array", a, "--queries", q});
  EXPECT_EQ(r.code, 0) << r.err;

  const CliResult answers = run({"solve", "--problem", "2riq", "--algo", "oracle", "--array", a, "--queries", q});
  auto ls = lines(answers.out);
  ls[4] = std::to_string(std::stoll(ls[4]) + 1);
  std::string corrupted;
  for (const auto& l : ls) corrupted += l + "\n";
  r = run({"verify", "--problem", "2riq", "--array", a, "--queries", q, "--answers", write("bad.txt", corrupted)});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_NE(r.out.find("FAIL: first mismatch at query 5"), std::string::npos) << r.out;

  const std::string empty = write("empty.txt", "");
  r = run({"verify", "--problem", "req", "--algo", "mo", "--array", a, "--queries", empty});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(Cli, VerifyGraphProblems) {
  const std::string g = gen({"graph", "--kind", "gnp", "--n", "25", "--p", "0.3"}, "g.txt");
  for (const std::string algo : {"oracle", "ayz", "via-2req"})
    EXPECT_EQ(run({"verify", "--problem", "etc", "--algo", algo, "--graph", g}).code, 0) << algo;
  for (const std::string algo : {"oracle", "ayz", "via-listing", "via-2rdq"})
    EXPECT_EQ(run({"verify", "--problem", "etd", "--algo", algo, "--graph", g}).code, 0) << algo;
}

TEST_F(Cli, CountDetectList) {
  const std::string k4 = gen({"graph", "--kind", "complete", "--n", "4"}, "k4.txt");
  CliResult r = run({"count", "--graph", k4, "--algo", "ayz"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).front(), "1 2 2");
  r = run({"detect", "--graph", k4, "--algo", "via-listing"});
  EXPECT_EQ(lines(r.out).back(), "3 4 1");
  for (const std::string algo : {"baseline", "via-detection", "main"}) {
    r = run({"list", "--graph", k4, "--t", "10", "--algo", algo});
    EXPECT_EQ(r.code, 0) << algo;
    EXPECT_EQ(r.out, "1 2 3\n1 2 4\n1 3 4\n2 3 4\n") << algo;
  }
  r = run({"list", "--graph", k4, "--t", "2", "--algo", "baseline"});
  EXPECT_EQ(lines(r.out).size(), 2u);
}

TEST_F(Cli, Minmax) {
  const std::string a = write("a.txt", "2 2\n1 2\n3 4\n");
  const std::string b = write("b.txt", "2 2\n5 6\n7 8\n");
  for (const std::string solver : {"oracle", "via-2rdq", "via-etd"}) {
    const CliResult r = run({"minmax", "--a", a, "--b", b, "--solver", solver});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2 2\n5 6\n5 6\n") << solver;
  }
  const std::string c = write("c.txt", "1 2\n1 2\n");
  EXPECT_EQ(run({"minmax", "--a", a, "--b", c}).code, kExitUsage);
}

TEST_F(Cli, SeededRunsAreReproducible) {
  const std::string g = gen({"graph", "--kind", "gnp", "--n", "40", "--p", "0.3"}, "g.txt");
  const std::vector<std::string> args{"--seed", "17", "list", "--graph", g, "--t", "30", "--algo", "main"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(Cli, BenchRowsAndHeader) {
  const CliResult r = run({"bench", "--problems", "req", "--algos", "mo", "--sizes", "64", "--reps", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0],
            "problem,algorithm,n,m,q,t,seed,wall_ns,extender_steps,matmul_calls,inner_solver_calls,status\r");
  for (Index i = 1; i < 4; ++i) EXPECT_EQ(ls[i].rfind("req,mo,64,0,64,", 0), 0u) << ls[i];
}

TEST_F(Cli, BenchOrderIsDeterministicAcrossThreads) {
  const std::vector<std::string> base{"bench", "--problems", "riq,req,etc", "--algos", "oracle,mo,ayz",
                                      "--sizes", "32,16"};
  auto strip_times = [](const std::string& csv) {
    std::string out;
    for (auto l : lines(csv)) {
      // drop wall_ns (8th column)
      std::vector<std::string> cells;
      std::istringstream in(l);
      for (std::string c; std::getline(in, c, ',');) cells.push_back(c);
      if (cells.size() > 7) cells.erase(cells.begin() + 7);
      for (const auto& c : cells) out += c + ",";
      out += "\n";
    }
    return out;
  };
  auto one = base, four = base;
  one.insert(one.begin(), {"--threads", "1"});
  four.insert(four.begin(), {"--threads", "4"});
  const CliResult a = run(one), b = run(four);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(strip_times(a.out), strip_times(b.out));
  EXPECT_EQ(lines(a.out).size(), 1u + 3 * 2 * 2);  // (riq, req: oracle, mo; etc: oracle, ayz) x 2 sizes
}

TEST_F(Cli, BenchBudgetSkipRow) {
  const CliResult r = run({"bench", "--problems", "minmax", "--algos", "oracle", "--sizes", "4096", "--budget-mb", "1"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_NE(ls[1].find("skipped: estimated"), std::string::npos);
}

TEST(BenchCsv, QuotesSpecialFields) {
  EXPECT_EQ(bench::csv_field("plain"), "plain");
  EXPECT_EQ(bench::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(bench::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(BenchSlope, MoStepsGrowAsThreeHalvesPower) {
  bench::BenchConfig cfg;
  cfg.problems = {"req"};
  cfg.algorithms = {"mo", "online-eq"};
  cfg.sizes = {256, 1024, 4096};
  const auto rows = bench::run(cfg);
  std::vector<double> xs, ys;
  for (const auto& r : rows)
    if (r.algorithm == "mo") {
      xs.push_back(std::log(static_cast<double>(r.n)));
      ys.push_back(std::log(static_cast<double>(r.extender_steps)));
    }
  ASSERT_EQ(xs.size(), 3u);
  const double slope = (ys.back() - ys.front()) / (xs.back() - xs.front());
  EXPECT_NEAR(slope, 1.5, 0.15);
}

TEST(Binary, ExitCodes) {
  const std::string bin = TRIQ_CLI_PATH;
  EXPECT_EQ(std::system((bin + " gen graph --kind complete --n 3 > /dev/null").c_str()), 0);
  const int bad = std::system((bin + " solve > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(bad), kExitUsage);
}

}  // namespace
}  // namespace triq::cli
