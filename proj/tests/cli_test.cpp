#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "causal/cli.hpp"

namespace fs = std::filesystem;
using causal::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string circuit(const std::string& name) {
  return std::string(CIRCUITS_DIR) + "/" + name + ".kcir";
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kcir_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ClassifyAbMemoryJson) {
  auto r = run({"classify", "--circuit", circuit("abmem"), "--horizon", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "not-time-preserving");
  EXPECT_EQ(j["circuit"], "abmem");
  EXPECT_EQ(j["command"], "classify");
  EXPECT_TRUE(j["timing"].is_null());
  const auto& w = j["witness"];
  EXPECT_EQ(w["s0"]["t"], 0);
  EXPECT_EQ(w["s0"]["trace"], nlohmann::json::array({"A/A"}));
  EXPECT_EQ(w["u1"]["trace"], nlohmann::json::array({"A/A", "B/B", "B/A"}));
  EXPECT_EQ(w["X"], nlohmann::json::parse(R"([{"channel":"D","tick":0}])"));
  EXPECT_EQ(w["Y"], nlohmann::json::parse(R"([{"channel":"D","tick":1}])"));
  EXPECT_EQ(j["stats"]["signals"], 819);
}

TEST_F(CliTest, ClassifyTextAndTiming) {
  auto r = run({"classify", "--circuit", circuit("dff"), "--timing"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("time-preserving"), std::string::npos);
  EXPECT_NE(r.out.find("wall_seconds"), std::string::npos);
  auto j = run({"classify", "--circuit", circuit("dff"), "--format", "json", "--timing"});
  EXPECT_TRUE(nlohmann::json::parse(j.out)["timing"]["wall_seconds"].is_number());
}

TEST_F(CliTest, SrLatchIsNotFundamentalFormWithExitZero) {
  auto r = run({"classify", "--circuit", circuit("srlatch"), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "not-fundamental-form");
}

TEST_F(CliTest, SimulateDffWritesTraceAndFlagsUndefined) {
  const auto out = (dir_ / "trace.csv").string();
  auto r = run({"simulate", "--circuit", circuit("dff"), "--stimulus",
                std::string(CIRCUITS_DIR) + "/edge.csv", "--out", out});
  EXPECT_EQ(r.code, causal::cli::kExitUndefined);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), "tick,output\n0,UNDEF\n1,b\n2,b\n3,e\n");
  auto allowed = run({"simulate", "--circuit", circuit("dff"), "--stimulus",
                      std::string(CIRCUITS_DIR) + "/edge.csv", "--allow-undef"});
  EXPECT_EQ(allowed.code, 0);
  EXPECT_EQ(allowed.out, buf.str());
}

TEST_F(CliTest, SimulateSrLatchWithoutControlColumn) {
  auto stim = write("sr.csv", "tick,S,R\n0,1,0\n1,0,0\n2,0,1\n");
  auto r = run({"simulate", "--circuit", circuit("srlatch"), "--stimulus", stim});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "tick,output\n0,1\n1,1\n2,0\n");
}

TEST_F(CliTest, StimulusGapsAndDuplicatesAreUsageErrors) {
  auto gap = write("gap.csv", "tick,control,D\n0,0,a\n2,1,b\n");
  EXPECT_EQ(run({"simulate", "--circuit", circuit("dff"), "--stimulus", gap}).code, 2);
  auto dup = write("dup.csv", "tick,control,D\n0,0,a\n0,1,b\n");
  EXPECT_EQ(run({"simulate", "--circuit", circuit("dff"), "--stimulus", dup}).code, 2);
  auto ragged = write("ragged.csv", "tick,control,D\n0,0\n");
  EXPECT_EQ(run({"simulate", "--circuit", circuit("dff"), "--stimulus", ragged}).code, 2);
  auto unknown = write("unknown.csv", "tick,control,Q\n0,0,a\n");
  EXPECT_EQ(run({"simulate", "--circuit", circuit("dff"), "--stimulus", unknown}).code, 2);
}

TEST_F(CliTest, ParseErrorsReportLocation) {
  auto bad = write("bad.kcir", "circuit w {\n  kind warp;\n}\n");
  auto r = run({"classify", "--circuit", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("2:8: unknown kind 'warp'"), std::string::npos) << r.err;
  EXPECT_EQ(run({"classify", "--circuit", (dir_ / "missing.kcir").string()}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"classify"}).code, 2);
  EXPECT_EQ(run({"classify", "--circuit", circuit("dff"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"classify", "--circuit", circuit("dff"), "--jobs", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, ChiDump) {
  auto r = run({"chi-dump", "--circuit", circuit("abmem"), "--control", "A/-,B/A,-/B"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0 UNDEF\n1 {(D,0)}\n2 {(D,1)}\n");
  auto dff = run({"chi-dump", "--circuit", circuit("dff"), "--control", "0,1,0,1"});
  EXPECT_EQ(dff.out, "0 UNDEF\n1 {(D,1)}\n2 {(D,1)}\n3 {(D,3)}\n");
  EXPECT_EQ(run({"chi-dump", "--circuit", circuit("srlatch"), "--control", "-"}).code, 2);
  EXPECT_EQ(run({"chi-dump", "--circuit", circuit("dff"), "--control", "0,7"}).code, 2);
}

TEST_F(CliTest, CheckReportsNoViolations) {
  for (const char* name : {"dff", "mux", "counter", "togglers", "abmem", "enable_counter",
                           "cdc_sampler"}) {
    auto r = run({"check", "--circuit", circuit(name), "--format", "json", "--trials", "300"});
    ASSERT_EQ(r.code, 0) << name << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["results"]["chi_soundness"]["ok"].get<bool>()) << name;
    EXPECT_TRUE(j["results"]["causality"]["ok"].get<bool>()) << name;
  }
  auto sr = run({"check", "--circuit", circuit("srlatch"), "--format", "json"});
  EXPECT_TRUE(nlohmann::json::parse(sr.out)["results"]["chi_soundness"].is_null());
}

TEST_F(CliTest, ClassifyOutputIndependentOfJobs) {
  for (const char* name : {"dff", "mux", "counter", "togglers", "abmem"}) {
    auto one = run({"classify", "--circuit", circuit(name), "--format", "json", "--jobs", "1"});
    auto many = run({"classify", "--circuit", circuit(name), "--format", "json", "--jobs", "6"});
    EXPECT_EQ(one.out, many.out) << name;
  }
}
