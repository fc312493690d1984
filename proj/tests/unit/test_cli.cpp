#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "stix/digraph.hpp"
#include "stix/io.hpp"
#include "stix_cli/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = stix::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("stix-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) {
    const auto p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

// Checks the fields every JSON report must carry.
void expect_envelope(const json& j, const std::string& command) {
  EXPECT_EQ(j.at("schema_version"), "stable-index/1");
  EXPECT_EQ(j.at("command"), command);
  EXPECT_TRUE(j.at("inputs").is_object());
  EXPECT_TRUE(j.contains("outcome"));
  EXPECT_TRUE(j.at("timing").at("elapsed_seconds").is_number());
  EXPECT_EQ(j.at("tool_version"), stix::cli::kToolVersion);
}

}  // namespace

TEST_F(Cli, ThetaTextOutputs) {
  const auto j2 = write("j2.txt", "2\n11\n11\n");
  EXPECT_EQ(run({"theta", j2}).out, "finite theta=1 witness=(1,1)\n");
  ASSERT_EQ(run({"construct", "circulant", "5", "--out", path("c5.txt")}).code, 0);
  const auto c = run({"theta", path("c5.txt"), "--policy=cycle"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "infinite certificate=power-cycle a=1 b=6\n");
  EXPECT_EQ(run({"theta", path("c5.txt")}).out, "infinite certificate=bound-exceeded horizon=6\n");
  EXPECT_EQ(run({"theta", path("c5.txt"), "--policy", "cap:2"}).out,
            "infinite certificate=bound-exceeded horizon=2\n");
  ASSERT_EQ(run({"construct", "glasses", "4", "3", "5", "--out", path("g435.txt")}).code, 0);
  EXPECT_EQ(run({"theta", path("g435.txt")}).out.rfind("finite theta=21", 0), 0u);
}

TEST_F(Cli, ThetaJsonIsOneBased) {
  const auto j2 = write("j2.txt", "2\n11\n11\n");
  const auto r = run({"theta", j2, "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  expect_envelope(j, "theta");
  EXPECT_EQ(j["outcome"]["kind"], "finite");
  EXPECT_EQ(j["outcome"]["theta"], 1);
  EXPECT_EQ(j["outcome"]["witness"], json::array({1, 1}));

  const auto c = json::parse(run({"theta", write("c3.txt", "3\n010\n001\n100\n"), "--policy=cycle", "--json"}).out);
  EXPECT_EQ(c["outcome"]["kind"], "infinite");
  EXPECT_EQ(c["outcome"]["certificate"]["type"], "power-cycle");
  EXPECT_EQ(c["outcome"]["certificate"]["b"], 4);
}

TEST_F(Cli, ThetaEdgeListInput) {
  const auto e = write("c3.edges", "3 4\n1 2\n2 3\n3 1\n1 1\n");
  const auto r = run({"theta", e, "--format", "edges"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("finite", 0), 0u);
}

TEST_F(Cli, ParseErrorsExitTwoWithLine) {
  const auto bad = write("bad.txt", "3\n010\n0x1\n100\n");
  const auto r = run({"theta", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run({"theta", path("missing.txt")}).code, 2);
  EXPECT_EQ(run({"theta", bad, "--policy=cap:0"}).code, 2);
  EXPECT_EQ(run({"theta", bad, "--policy=fast"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, ConstructRoundTrip) {
  ASSERT_EQ(run({"construct", "glasses", "4", "2", "3", "--out", path("g.txt")}).code, 0);
  const auto m = stix::read_matrix_file(path("g.txt"));
  EXPECT_EQ(m.order(), 7u);
  EXPECT_EQ(m.count_ones(), 8u);
  EXPECT_EQ(m, stix::to_matrix(stix::build_glasses(4, 2, 3).digraph));
  ASSERT_EQ(run({"construct", "circulant", "5", "--out", path("c.txt")}).code, 0);
  EXPECT_EQ(stix::read_matrix_file(path("c.txt")), stix::circulant(5));
  ASSERT_EQ(run({"construct", "glasses", "4", "3", "5", "--format", "edges", "--out", path("g.edges")}).code, 0);
  EXPECT_EQ(stix::read_edge_list_file(path("g.edges")), stix::build_glasses(4, 3, 5).digraph);
}

TEST_F(Cli, ConstructRejectsBadParameters) {
  EXPECT_EQ(run({"construct", "glasses", "4", "1", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "glasses", "4", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "glasses", "0", "2", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "circulant", "0"}).code, 2);
  EXPECT_EQ(run({"construct", "wheel", "5"}).code, 2);
}

TEST_F(Cli, Bound) {
  const auto ten = run({"bound", "10"});
  EXPECT_EQ(ten.code, 0);
  EXPECT_NE(ten.out.find("g=21"), std::string::npos);
  EXPECT_NE(ten.out.find("pair={7,3}"), std::string::npos);
  EXPECT_NE(ten.out.find("g(4,3,5)"), std::string::npos);
  EXPECT_NE(ten.out.find("census: 4"), std::string::npos);
  const auto six = run({"bound", "6"});
  EXPECT_NE(six.out.find("s=7 (table)"), std::string::npos);
  EXPECT_NE(six.out.find("not applicable"), std::string::npos);
  const auto seven = run({"bound", "7"});
  EXPECT_NE(seven.out.find("g=12"), std::string::npos);
  EXPECT_NE(seven.out.find("pair={4,3}"), std::string::npos);
  EXPECT_NE(run({"bound", "--table"}).out.find("5 6\n"), std::string::npos);
  EXPECT_EQ(run({"bound", "1"}).code, 2);
  EXPECT_EQ(run({"bound"}).code, 2);
  const auto j = json::parse(run({"bound", "10", "--json"}).out);
  expect_envelope(j, "bound");
  EXPECT_EQ(j["outcome"]["census"].size(), 4u);
}

TEST_F(Cli, SearchSummaryAndGate) {
  const auto r = run({"search", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n=3 s=3"), std::string::npos);
  const auto six = run({"search", "6"});
  EXPECT_EQ(six.code, 2);
  EXPECT_NE(six.err.find("long-run"), std::string::npos);
  EXPECT_EQ(run({"search", "7"}).code, 2);
  EXPECT_EQ(run({"search", "3", "--shards", "2", "--shard-index", "2"}).code, 2);
}

TEST_F(Cli, SearchResumeAndJson) {
  const auto dir = path("ckpt");
  ASSERT_EQ(run({"search", "4", "--shards", "4", "--shard-index", "1", "--resume-dir", dir}).code, 0);
  EXPECT_TRUE(fs::exists(fs::path(dir) / "shard-1-of-4.json"));
  ASSERT_EQ(run({"search", "4", "--shards", "4", "--resume-dir", dir, "--report", path("a.json")}).code, 0);
  ASSERT_EQ(run({"search", "4", "--report", path("b.json")}).code, 0);
  std::ifstream a(path("a.json")), b(path("b.json"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());

  const auto j = json::parse(run({"search", "3", "--json", "--threads", "2"}).out);
  expect_envelope(j, "search");
  EXPECT_EQ(j["outcome"]["s_value"], 3);
  EXPECT_EQ(j["outcome"]["matrices_scanned"], 512);
}

TEST_F(Cli, VerifySuites) {
  const auto r = run({"verify", "lemma3", "--max", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS lemma3"), std::string::npos);
  const auto five = run({"verify", "lemma5", "--max", "100"});
  EXPECT_EQ(five.code, 0);
  EXPECT_NE(five.out.find("(10,9)"), std::string::npos);
  EXPECT_EQ(run({"verify", "eq3", "--max", "5"}).code, 0);
  EXPECT_EQ(run({"verify", "lemma8", "--max", "5", "--trials", "200", "--seed", "9"}).code, 0);
  EXPECT_EQ(run({"verify", "lemma4", "--max", "8"}).code, 0);
  EXPECT_EQ(run({"verify", "theorem1", "--max", "12"}).code, 0);
  EXPECT_EQ(run({"verify", "theorem1", "--max", "30"}).code, 2);
  EXPECT_EQ(run({"verify", "lemma7"}).code, 2);
  const auto j = json::parse(run({"verify", "lemma5", "--max", "20", "--json"}).out);
  expect_envelope(j, "verify");
  EXPECT_EQ(j["outcome"]["passed"], true);
}

TEST_F(Cli, Classify) {
  ASSERT_EQ(run({"construct", "glasses", "4", "2", "3", "--out", path("g423.txt")}).code, 0);
  const auto e = run({"classify", path("g423.txt")});
  EXPECT_EQ(e.code, 0);
  EXPECT_NE(e.out.find("extremal: yes, spec g(4,3)"), std::string::npos);
  ASSERT_EQ(run({"construct", "circulant", "7", "--out", path("c7.txt")}).code, 0);
  EXPECT_EQ(run({"classify", path("c7.txt")}).out, "theta infinite, not extremal\n");
  ASSERT_EQ(run({"construct", "glasses", "2", "2", "5", "--out", path("g225.txt")}).code, 0);
  EXPECT_EQ(run({"classify", path("g225.txt")}).out, "theta=10 < g(7)=12, not extremal\n");
  ASSERT_EQ(run({"construct", "glasses", "5", "3", "4", "--out", path("g534.txt")}).code, 0);
  EXPECT_NE(run({"classify", path("g534.txt")}).out.find("spec g(5,3,4)"), std::string::npos);
  EXPECT_EQ(run({"classify", write("small.txt", "2\n11\n11\n")}).code, 2);
  const auto j = json::parse(run({"classify", path("g423.txt"), "--json"}).out);
  expect_envelope(j, "classify");
  EXPECT_EQ(j["outcome"]["extremal"], true);
  EXPECT_EQ(j["outcome"]["matched_spec"]["label"], "g(4,3)");
}
