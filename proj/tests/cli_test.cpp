#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "octbic/graph.hpp"
#include "octbic/oracle.hpp"
#include "test_graphs.hpp"

namespace octbic {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(OCTBIC_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("octbic_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name), std::ios::binary) << text;
    return file(name);
  }

  fs::path dir_;
};

TEST_F(Cli, GenerateRejectsDensityOutOfRange) {
  EXPECT_EQ(run("generate --nl 4 --nr 2 --d-lr 1.5 -o " + file("x")).code, 2);
  EXPECT_FALSE(fs::exists(file("x.graph")));
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, GenerateCompleteBipartite) {
  const Outcome r = run("generate --nl 4 --nr 2 --no 0 --d-lr 1 --cv 0 --seed 0 -o " + file("k"));
  ASSERT_EQ(r.code, 0) << r.out;
  const Graph g = read_graph_file(file("k.graph"));
  EXPECT_EQ(serialize_graph(g), serialize_graph(testing::complete_bipartite(4, 2)));
  EXPECT_EQ(slurp(file("k.oct")), "L: 0 1 2 3\nR: 4 5\nO:\n");
}

TEST_F(Cli, GenerateIsDeterministic) {
  const std::string flags =
      "generate --nl 900 --nr 100 --no 10 --d-lr 0.05 --d-cross 0.05 --d-o 0.05 "
      "--cv 0.5 --seed 1 -o ";
  ASSERT_EQ(run(flags + file("a")).code, 0);
  ASSERT_EQ(run(flags + file("b")).code, 0);
  EXPECT_EQ(slurp(file("a.graph")), slurp(file("b.graph")));
  EXPECT_EQ(slurp(file("a.oct")), slurp(file("b.oct")));
  EXPECT_FALSE(slurp(file("a.graph")).empty());
}

TEST_F(Cli, EnumerateCounts) {
  const std::string c5 = write("c5.graph", serialize_graph(testing::cycle(5)));
  const Outcome r = run("enumerate " + c5 + " --algorithm enum-mib");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count=5\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("wall_time_s="), std::string::npos);

  const std::string k22 = write("k22.graph", serialize_graph(testing::complete_bipartite(2, 2)));
  const std::string oct = write("k22.oct", "L: 0 1\nR: 2 3\nO:\n");
  const Outcome m = run("enumerate " + k22 + " --algorithm oct-mica --oct " + oct);
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("count=1\n"), std::string::npos) << m.out;

  for (const char* algo : {"oct-mib2", "oct-mica"}) {
    const Outcome h = run("enumerate " + c5 + " -a " + algo + " --oct-heuristic");
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("count=5\n"), std::string::npos) << h.out;
  }
}

TEST_F(Cli, EnumerateUsageErrors) {
  const std::string c5 = write("c5.graph", serialize_graph(testing::cycle(5)));
  EXPECT_EQ(run("enumerate " + c5 + " -a nope").code, 2);
  EXPECT_EQ(run("enumerate " + c5 + " -a oct-mica").code, 2);
  const std::string bad = write("bad.oct", "L: 0 1\nR: 2 3\nO: 4\n");
  EXPECT_EQ(run("enumerate " + c5 + " -a oct-mica --oct " + bad).code, 2);
  EXPECT_EQ(run("enumerate " + file("missing.graph") + " -a mica").code, 1);
}

TEST_F(Cli, ListIsSortedAndStable) {
  std::mt19937_64 rng(2);
  const Graph graph = testing::erdos_renyi(12, 0.4, rng);
  const std::string g = write("g.graph", serialize_graph(graph));
  const Outcome a = run("enumerate " + g + " -a mica --list");
  const Outcome b = run("enumerate " + g + " -a oct-mica --oct-heuristic --list");
  ASSERT_EQ(a.code, 0);
  std::vector<std::string> la, lb;
  std::istringstream sa(a.out), sb(b.out);
  for (std::string line; std::getline(sa, line);) {
    if (line.find(" | ") != std::string::npos) la.push_back(line);
  }
  for (std::string line; std::getline(sb, line);) {
    if (line.find(" | ") != std::string::npos) lb.push_back(line);
  }
  std::vector<std::string> expected;
  for (const Biclique& m : oracle::brute_mbs(graph)) expected.push_back(format_biclique(graph, m));
  EXPECT_EQ(la, expected);
  EXPECT_EQ(lb, expected);
  EXPECT_EQ(run("enumerate " + g + " -a mica --list").out.substr(0, 20), a.out.substr(0, 20));
}

TEST_F(Cli, TimeoutExitCode) {
  ASSERT_EQ(run("generate --nl 400 --nr 80 --no 10 --d-lr 0.3 --d-cross 0.3 --d-o 0.3 "
                "--seed 1 -o " + file("big")).code,
            0);
  const Outcome r = run("enumerate " + file("big.graph") + " -a mica --timeout 0.001");
  EXPECT_EQ(r.code, 124);
  EXPECT_NE(r.out.find("timed_out=true"), std::string::npos);
}

TEST_F(Cli, OctCommand) {
  const std::string c5 = write("c5.graph", serialize_graph(testing::cycle(5)));
  const Outcome r = run("oct " + c5 + " -o " + file("c5.oct"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n_o=1"), std::string::npos);
  EXPECT_EQ(run("oct " + c5 + " --validate " + file("c5.oct")).code, 0);
  const std::string bad = write("bad.oct", "L: 0 1\nR: 2 3\nO: 4\n");
  EXPECT_EQ(run("oct " + c5 + " --validate " + bad).code, 1);
  EXPECT_NE(run("oct " + c5 + " --exhaustive 1").out.find("n_o=1"), std::string::npos);
}

TEST_F(Cli, BenchCsv) {
  const Outcome r = run(
      "bench --nl 40 --nr 10 --no 4 --d-lr 0.05 --d-cross 0.05 --d-o 0.05 --cv 0.5 "
      "--vary d_cross --values 0.01,0.05,0.11 --seeds 1,2 --algorithms mica,oct-mica -j 2");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 13u);
  EXPECT_EQ(lines[0], "algorithm,n_l,n_r,n_o,d_lr,d_cross,d_o,cv,seed,count,wall_time_s,timed_out");
  EXPECT_EQ(run("bench --nl 40 --nr 10 --seeds 1 --algorithms ,").code, 2);
}

}  // namespace
}  // namespace octbic
