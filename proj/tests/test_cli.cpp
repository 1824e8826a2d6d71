#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(ANGULARITY_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("angularity_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write("cube3.json", R"({"n":3,"vertices":[[0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[1,0,1],[0,1,1],[1,1,1]]})");
    write("square.json", R"({"n":2,"vertices":[[0,0],[1,0],[0,1],[1,1]]})");
    write("bad.json", R"({"n":2,"vertices":[[0,0],[1,"1/0"]]})");
    write("form.json", R"({"n":2,"base":1,"fiber":1,"terms":[{"base_idx":[1],"fiber_idx":[2],"coef":1},{"base_idx":[2],"fiber_idx":[1],"coef":-1}]})");
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, IntrinsicVolumesOfCube) {
  const CliRun r = run("intrinsic --polytope " + path("cube3.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"V\""), std::string::npos);
  EXPECT_NE(r.out.find("\"inputs_digest\""), std::string::npos);
}

TEST_F(Cli, ClassifyRankReportsVerdict) {
  const CliRun r = run("classify-rank --n 4 --k 2 --seed 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"rank\": 20"), std::string::npos);
  EXPECT_NE(r.out.find("\"verdict\": \"pass\""), std::string::npos);
}

TEST_F(Cli, MonteCarloRequiresSeed) {
  EXPECT_EQ(run("steiner --polytope " + path("square.json") + " --eps 0.5 --samples 1000").status, 1);
  EXPECT_EQ(run("steiner --polytope " + path("square.json") + " --eps 0.5 --samples 1e5 --seed 4").status, 0);
}

TEST_F(Cli, FailedCheckExitsWithTwo) {
  const CliRun r = run("steiner --polytope " + path("square.json") + " --eps 0.5 --samples 1000 --seed 4 --tol 0");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("\"verdict\": \"fail\""), std::string::npos);
}

TEST_F(Cli, InvalidInputExitsWithOne) {
  EXPECT_EQ(run("faces --polytope " + path("bad.json")).status, 1);
  EXPECT_EQ(run("faces --polytope " + path("missing.json")).status, 1);
  EXPECT_EQ(run("no-such-command").status, 1);
  EXPECT_EQ(run("lr --lambda 1,2 --mu 1").status, 1);
}

TEST_F(Cli, ExactCommands) {
  const CliRun lr = run("lr --lambda 2,1 --mu 2,1 --nu 3,2,1");
  EXPECT_EQ(lr.status, 0);
  EXPECT_NE(lr.out.find("\"coefficient\": 2"), std::string::npos);
  const CliRun weyl = run("weyl-dim --n 3 --weight 2,1");
  EXPECT_NE(weyl.out.find("\"dim\": \"8\""), std::string::npos);
  EXPECT_EQ(run("lemma-checks --nmax 6").status, 0);
  EXPECT_EQ(run("branch --lambda 2,2 --n 5").status, 0);
}

TEST_F(Cli, DirectConstCoeffAgreesWithFaceSum) {
  const CliRun r = run("direct-cc --polytope " + path("square.json") + " --form " + path("form.json") + " --samples 20000 --seed 3");
  EXPECT_EQ(r.status, 0);
}

TEST_F(Cli, JsonOutWritesReport) {
  const std::string out = path("report.json");
  EXPECT_EQ(run("faces --polytope " + path("square.json") + " --json-out " + out).status, 0);
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("\"f_vector\""), std::string::npos);
}

TEST_F(Cli, DigestDependsOnInputs) {
  const CliRun a = run("intrinsic --polytope " + path("cube3.json"));
  const CliRun b = run("intrinsic --polytope " + path("square.json"));
  auto digest = [](const std::string& s) { return s.substr(s.find("\"inputs_digest\""), 40); };
  EXPECT_NE(digest(a.out), digest(b.out));
}
