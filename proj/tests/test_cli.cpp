#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CONTAGION_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("contagion_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenThenSolve) {
  ASSERT_EQ(run("gen star --n 11 --out " + path("s.txt")).status, 0);
  auto r = run("solve --graph " + path("s.txt") + " --rho 1/20 --trace");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("size: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("set: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("round 1: 1 2 3 4 5 6 7 8 9 10\n"), std::string::npos);
}

TEST_F(Cli, GenWritesEdgeListToStdout) {
  auto r = run("gen path --n 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "3 2\n0 1\n1 2\n");
}

TEST_F(Cli, PercolateTrace) {
  {
    std::ofstream(path("p4.txt")) << "4 3\n0 1\n1 2\n2 3\n";
  }
  auto r = run("percolate --graph " + path("p4.txt") + " --rho 1/2 --seed-set 1 --trace");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "round 0: 1\nround 1: 0 2\nround 2: 3\ninfected: 4/4\nrounds: 2\ncontagious: yes\n");
}

TEST_F(Cli, Bound) {
  ASSERT_EQ(run("gen star --n 11 --out " + path("s.txt")).status, 0);
  auto r = run("bound --graph " + path("s.txt") + " --rho 1/20");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("eq1: 113/33\n"), std::string::npos);
  EXPECT_NE(r.out.find("two_rho_n: 11/10\n"), std::string::npos);
}

TEST_F(Cli, SolveMethods) {
  ASSERT_EQ(run("gen complete --n 5 --out " + path("k5.txt")).status, 0);
  for (const char* m : {"exact", "random-order-full", "random-order-restricted", "greedy"}) {
    auto r = run("solve --graph " + path("k5.txt") + " --rho 1/3 --trials 20 --method " + m);
    EXPECT_EQ(r.status, 0) << m;
    EXPECT_NE(r.out.find("size: 2\n"), std::string::npos) << m;
  }
  EXPECT_EQ(run("solve --graph " + path("k5.txt") + " --method ilp").status, 2);
}

TEST_F(Cli, VerifyChecks) {
  EXPECT_EQ(run("verify obs1 --rho 1/3").status, 0);
  EXPECT_EQ(run("verify obs3 --d 3").status, 0);
  EXPECT_EQ(run("verify prop31 --rho 7/25 --k 10 --mode structural").status, 0);
  ASSERT_EQ(run("gen cycle --n 5 --out " + path("c5.txt")).status, 0);
  auto thm3 = run("verify thm3 --graph " + path("c5.txt") + " --rho 11/20 --eps 1/20");
  EXPECT_EQ(thm3.status, 0);
  EXPECT_NE(thm3.out.find("outside guaranteed regime"), std::string::npos);
  EXPECT_EQ(run("verify thm2 --graph " + path("c5.txt") + " --rho 11/20").status, 0);
}

TEST_F(Cli, VerifyCorpusWritesCsv) {
  auto r = run("verify corpus --count 10 --n-max 8 --trials 5 --csv " + path("out.csv"));
  EXPECT_EQ(r.status, 0);
  std::ifstream in(path("out.csv"));
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("family,n,m,rho_num,rho_den,girth", 0), 0u);
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, 30u);
}

TEST_F(Cli, UsageAndIoErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("solve").status, 2);
  EXPECT_EQ(run("solve --graph " + path("missing.txt")).status, 2);
  EXPECT_EQ(run("gen star --n 4").status, 2);
  EXPECT_EQ(run("verify corpus --count 1 --csv /nonexistent-dir/x.csv").status, 2);
  {
    std::ofstream(path("bad.txt")) << "2 1\n0 0\n";
  }
  EXPECT_EQ(run("percolate --graph " + path("bad.txt")).status, 2);
}
