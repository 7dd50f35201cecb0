#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "picwalk/picwalk.hpp"

namespace picwalk::cli {
namespace {

namespace fs = std::filesystem;

std::string fixture(const std::string& name) { return std::string(PICWALK_FIXTURES) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("picwalk_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string machine(const std::string& builder) {
    const auto p = path(builder + ".m2d");
    EXPECT_EQ(run({"build", builder, "-o", p}).code, 0);
    return p;
  }

  fs::path dir_;
};

TEST_F(CliTest, BuildThenAcceptStackedWitness) {
  const auto a = machine("A_L1");
  const auto r = run({"accept", a, fixture("stacked_witness.pic")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ACCEPT\n");
}

TEST_F(CliTest, RejectAllZeros) {
  const auto r = run({"accept", machine("A_L1"), fixture("zeros_2x3.pic")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "REJECT\n");
}

TEST_F(CliTest, MalformedMachine) {
  const auto r = run({"accept", fixture("malformed.m2d"), fixture("stacked_witness.pic")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("parse error"), std::string::npos) << r.err;
}

TEST_F(CliTest, MissingFile) {
  EXPECT_EQ(run({"accept", path("nope.m2d"), fixture("stacked_witness.pic")}).code, 2);
}

TEST_F(CliTest, TraceHasOneUpLine) {
  const auto r = run({"trace", machine("A_L1"), fixture("stacked_witness.pic")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--U-->"), std::string::npos);
  EXPECT_EQ(r.out.find("--U-->"), r.out.rfind("--U-->"));
}

TEST_F(CliTest, TraceLoopAndNoRun) {
  const auto loop = run({"trace", fixture("looping.m2d"), fixture("zeros_2x3.pic")});
  EXPECT_EQ(loop.code, 1);
  EXPECT_EQ(loop.out.substr(loop.out.size() - 5), "LOOP\n");
  const auto none = run({"trace", machine("A_L1"), fixture("zeros_2x3.pic")});
  EXPECT_EQ(none.out, "NO ACCEPTING RUN\n");
}

TEST_F(CliTest, RunPrintsOutcomes) {
  const auto r = run({"run", fixture("looping.m2d"), fixture("zeros_2x3.pic")});
  EXPECT_EQ(r.out, "LOOP\n");
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, BudgetOverride) {
  const auto a = machine("A_L1");
  EXPECT_EQ(run({"accept", a, fixture("stacked_witness.pic"), "--budget-up", "0"}).code, 1);
  EXPECT_EQ(run({"accept", a, fixture("stacked_witness.pic"), "--budget-up", "2"}).code, 2);
  EXPECT_EQ(run({"accept", a, fixture("stacked_witness.pic"), "--budget-up", "x"}).code, 2);
}

TEST_F(CliTest, BuildRoundTrips) {
  const auto p = machine("M_M1");
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(parse_machine(buf.str()), build_M_M1());
  EXPECT_EQ(run({"build", "Z9"}).code, 2);
  EXPECT_EQ(run({"build", "A_L1", "--param", "2"}).code, 2);
  EXPECT_EQ(run({"build", "B_L", "--param", "0"}).code, 2);
}

TEST_F(CliTest, Check) {
  EXPECT_EQ(run({"check", "A_L1", "L1", "--rows", "2", "--cols-max", "5"}).code, 0);
  const auto flawed = run({"check", "FLAWED_L1_3W0", "L1", "--rows", "2", "--cols-max", "4"});
  EXPECT_EQ(flawed.code, 1);
  EXPECT_NE(flawed.out.find("MISMATCH"), std::string::npos);
  EXPECT_EQ(run({"check", "A_L1", "Q9"}).code, 2);
}

TEST_F(CliTest, SweepAndFormats) {
  const auto r = run({"sweep", "M_Mi", "M2", "--param", "2", "--cols-max", "3", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("budget_up=1 budget_left=inf pictures=4368 accepted=0"), std::string::npos) << r.out;
  EXPECT_EQ(run({"sweep", "A_L1", "L1", "--levels", "0,2"}).code, 2);
  EXPECT_EQ(run({"sweep", "A_L1", "L1", "--format", "xml"}).code, 2);
}

TEST_F(CliTest, Splice) {
  const auto r = run({"splice", "FLAWED_L1_3W0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ACCEPTED, NOT IN L1"), std::string::npos);
  EXPECT_EQ(run({"splice", "FLAWED_L1_3W0", "--z", "2"}).code, 1);
}

TEST_F(CliTest, Hierarchy) {
  const auto r = run({"hierarchy", "--i-max", "2", "--cols-max", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("confirmed"), std::string::npos);
  EXPECT_EQ(r.out.find("unconfirmed"), std::string::npos);
  EXPECT_EQ(r.out, run({"hierarchy", "--i-max", "2", "--cols-max", "4"}).out);
  EXPECT_EQ(run({"hierarchy", "--i-max", "0"}).code, 2);
}

TEST_F(CliTest, Enumerate) {
  const auto all = run({"enumerate", "--rows", "1", "--cols", "2"});
  EXPECT_EQ(all.out, "0\n--\n1\n--\n00\n--\n01\n--\n10\n--\n11\n");
  const auto count = run({"enumerate", "--rows", "2", "--cols", "3", "--machine", machine("A_L1"), "--count"});
  EXPECT_EQ(count.out, "11\n");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"accept"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace picwalk::cli
