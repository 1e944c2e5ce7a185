#include <gtest/gtest.h>
#include <sys/wait.h>

#include <apery/json_io.hpp>
#include <apery/delta.hpp>
#include <cstdio>

using namespace apery;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(APERY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, VerifyEuler) {
  const auto r = run("verify --identity euler");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS euler"), std::string::npos);
  const auto j = run("verify --identity euler --format json");
  ASSERT_EQ(j.code, 0);
  const auto report = nlohmann::json::parse(j.out);
  EXPECT_TRUE(report.at("pass").get<bool>());
  EXPECT_LT(std::stod(report.at("residual").get<std::string>()), 1e-40);
  EXPECT_EQ(report.at("tolerance").get<std::string>(), "1.00e-35");
}

TEST(Cli, VerifyList) {
  const auto r = run("verify --list");
  EXPECT_EQ(r.code, 0);
  for (const char* name : {"euler", "zeta3", "th18", "t1-spotcheck", "bbb-coeffs"})
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
}

TEST(Cli, DeltaBothPrintsOnce) {
  const auto r = run("delta --class 3,3 --method both");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1(5,1) + 2(3,3) + 2(3,2,1) + 3(2,4) + 3(2,3,1) + 3(2,1,3) + 3(2,1,2,1)\n");
}

TEST(Cli, DeltaJsonRoundTrip) {
  for (const char* cls : {"3,3", "2,1,2", "5", "4,1,2"}) {
    const auto r = run(std::string("delta --format json --class ") + cls);
    ASSERT_EQ(r.code, 0);
    const auto parsed = json_io::lincomb_from_json<Composition, Integer>(nlohmann::json::parse(r.out));
    EXPECT_EQ(parsed, delta_inductive(DualityClass(parse_composition(cls)))) << cls;
  }
  const auto p = run("delta --format json --ring poly --class 2,2");
  ASSERT_EQ(p.code, 0);
  const auto parsed = json_io::lincomb_from_json<Composition, IntPoly>(nlohmann::json::parse(p.out));
  EXPECT_EQ(parsed.coefficient_of(Composition(std::vector<int>{2, 2})), IntPoly(6));
}

TEST(Cli, RankTableCsv) {
  const auto r = run("rank-table --map delta --max-weight 10 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,rank\n0,0\n1,0\n2,0\n3,0\n4,0\n5,0\n6,1\n7,0\n8,4\n9,2\n10,14\n");
  const auto a = run("rank-table --map alpha --max-weight 9 --format csv");
  EXPECT_EQ(a.out, "k,rank\n1,0\n2,0\n3,0\n4,0\n5,0\n6,1\n7,0\n8,3\n9,2\n");
}

TEST(Cli, RankTableKernelJson) {
  const auto r = run("rank-table --map alpha --max-weight 6 --kernel --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& row = j.back();
  EXPECT_EQ(row.at("k").get<int>(), 6);
  ASSERT_EQ(row.at("kernel").size(), 1u);
  const auto l = json_io::lincomb_from_json<DualityClass, Integer>(row.at("kernel")[0]);
  EXPECT_TRUE(alpha(l).zero());
  EXPECT_EQ(l.size(), 10u);
}

TEST(Cli, EnumerateAndMatrix) {
  const auto e = run("enumerate --weight 5 --filter classes");
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "[5]\n[4,1]\n[3,2]\n[2,3]\n");
  const auto j = run("enumerate --weight 4 --format json");
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out).size(), 4u);
  const auto m = run("delta-matrix --weight 4 --format json");
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(nlohmann::json::parse(m.out).at("matrix"), nlohmann::json::parse("[[3,6],[0,1]]"));
}

TEST(Cli, Eval) {
  const auto r = run("eval --sigma 2 --digits 30 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(std::stod(j.at("value").get<std::string>()), 0.5483113556160754, 1e-15);
  EXPECT_LT(std::stod(j.at("abs_error").get<std::string>()), 1e-30);
  const auto t = run("eval --zeta-tail 2 --n 0 --digits 20");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("1.644934066848226436"), std::string::npos);
  EXPECT_NE(t.out.find("±"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("delta --class 1,2").code, 2);
  EXPECT_EQ(run("delta --class 3,x").code, 2);
  EXPECT_EQ(run("verify --identity no-such-thing").code, 2);
  EXPECT_EQ(run("eval --sigma 2 --digits 100").code, 2);
  EXPECT_EQ(run("rank-table --map delta --max-weight 13").code, 2);
  EXPECT_EQ(run("enumerate --weight 4 --filter bogus").code, 2);
  EXPECT_EQ(run("--no-such-flag").code, 2);
  EXPECT_EQ(run("").code, 2);
}
