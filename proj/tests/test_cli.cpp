#include "commands.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hexcount");
  std::ostringstream out, err;
  const int code = hexcount::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "hexcount_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

class ThreadEnv {
 public:
  explicit ThreadEnv(const char* v) { ::setenv("HEXCOUNT_THREADS", v, 1); }
  ~ThreadEnv() { ::unsetenv("HEXCOUNT_THREADS"); }
};

}  // namespace

TEST(CliCount, Box) {
  const auto r = run({"count", "--box", "2", "2", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "20\n");
  const auto all = run({"count", "--box", "3", "2", "4", "--route", "all", "--json"});
  EXPECT_EQ(all.code, 0);
  const auto j = json::parse(all.out);
  EXPECT_EQ(j["routes"]["closed"], j["routes"]["oracle"]);
  EXPECT_EQ(j["routes"]["closed"], j["routes"]["det"]);
}

TEST(CliCount, SmallestDefectHexagon) {
  for (const char* route : {"closed", "det", "oracle"}) {
    const auto r = run({"count", "--n", "1", "--N", "2", "--s", "0", "--route", route});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n") << route;
  }
}

TEST(CliCount, AllRoutesOnAnOddRegion) {
  const auto r = run({"count", "--n", "3", "--N", "5", "--s", "2", "--route", "all", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_EQ(j["params"]["parity"], "odd");
  std::set<std::string> values;
  for (const auto& [k, v] : j["routes"].items()) values.insert(v.get<std::string>());
  EXPECT_EQ(values.size(), 1u);
  EXPECT_EQ(j["routes"].size(), 4u);
  const auto human = run({"count", "--n", "3", "--N", "5", "--s", "2", "--route", "all"});
  EXPECT_NE(human.out.find("agree       yes"), std::string::npos);
}

TEST(CliCount, UsageErrors) {
  EXPECT_EQ(run({"count", "--n", "0", "--N", "2", "--s", "0"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "2", "--N", "4", "--s", "3"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "2", "--N", "5", "--s", "0"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"count", "--box", "1", "1", "1", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--box", "1", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--box", "1", "1", "1", "--route", "fast"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "x", "--N", "2", "--s", "0"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--version"}).code, 0);
}

TEST(CliVerify, DefaultGridPasses) {
  const auto r = run({"verify", "--json"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["cases"].size(), 72u);
  EXPECT_TRUE(j["failures"].empty());
  bool odd = false;
  for (const auto& c : j["cases"]) odd = odd || c["N"].get<int>() % 2 == 1;
  EXPECT_TRUE(odd);
  EXPECT_FALSE(j["cases"][0].contains("ms"));
}

TEST(CliVerify, OddOnlyGrid) {
  const auto r = run({"verify", "--parity", "odd", "--max-n", "3", "--max-m", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all routes agree on 12 cases"), std::string::npos);
}

TEST(CliVerify, InjectedFaultNamesTheTuple) {
  const auto r = run({"verify", "--inject-fault", "2,4,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL (n=2, N=4, s=1)"), std::string::npos);
  EXPECT_NE(r.err.find("(n=2, N=4, s=1)"), std::string::npos);
  const auto j = json::parse(run({"verify", "--json", "--inject-fault", "3,5,3"}).out);
  ASSERT_EQ(j["failures"].size(), 1u);
  EXPECT_EQ(j["failures"][0]["n"], 3);
  EXPECT_EQ(j["failures"][0]["N"], 5);
  EXPECT_EQ(j["failures"][0]["s"], 3);
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_EQ(run({"verify", "--inject-fault", "2;4;1"}).code, 2);
}

TEST(CliVerify, ProcessExitStatus) {
  const std::string exe = HEXCOUNT_EXE;
  int st = std::system((exe + " verify --max-n 2 --max-m 2 > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(st), 0);
  st = std::system((exe + " verify --inject-fault 2,4,1 > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(st), 1);
  st = std::system((exe + " verify --max-n 0 > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(st), 2);
}

TEST(CliVerify, OrderAndBytesDoNotDependOnThreads) {
  std::string one, three;
  {
    ThreadEnv env("1");
    one = run({"verify", "--json"}).out;
  }
  {
    ThreadEnv env("3");
    three = run({"verify", "--json"}).out;
  }
  EXPECT_EQ(one, three);
  EXPECT_EQ(run({"verify"}).out, run({"verify"}).out);
  ThreadEnv bad("zero");
  EXPECT_EQ(run({"verify"}).code, 2);
}

TEST(CliVerify, TimingIsOptIn) {
  const auto j = json::parse(run({"verify", "--json", "--timing", "--max-n", "2", "--max-m", "1"}).out);
  EXPECT_TRUE(j["cases"][0].contains("ms"));
}

TEST(CliPolydet, DegreeTwo) {
  const auto r = run({"polydet", "--n", "2", "--s", "0", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["polynomial"], json({"3/1", "6/1", "3/1"}));
  EXPECT_TRUE(j["checks"]["gminus"].get<bool>());
}

TEST(CliPolydet, MultiplicityTable) {
  const auto j = json::parse(run({"polydet", "--n", "4", "--s", "1", "--json"}).out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["degree"], 9);
  std::map<std::string, int> req;
  for (const auto& f : j["integer_factors"]) req[f["root"].get<std::string>()] = f["required"].get<int>();
  EXPECT_EQ(req["0/1"], 1);
  EXPECT_EQ(req["-1/1"], 1);
  EXPECT_EQ(req["-2/1"], 3);
  EXPECT_EQ(req["-3/1"], 1);
  EXPECT_EQ(req["-4/1"], 1);
  const auto human = run({"polydet", "--n", "4", "--s", "1"});
  EXPECT_NE(human.out.find("factors m + k + 1/2  required"), std::string::npos);
}

TEST(CliPolydet, ConstantCase) {
  const auto r = run({"polydet", "--n", "1", "--s", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("det B(1, m, 0) = 1\n"), std::string::npos);
  EXPECT_EQ(run({"polydet", "--n", "3", "--s", "3"}).code, 2);
}

TEST(CliIdentities, Suites) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"identities", "--suite", "vandermonde", "--seed", "7", "--json"},
        {"identities", "--suite", "halb", "--max-n", "6", "--json"},
        {"identities", "--suite", "ganz", "--max-n", "6", "--json"},
        {"identities", "--suite", "pfaff", "--json"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args[2];
    const auto j = json::parse(r.out);
    ASSERT_EQ(j["suites"].size(), 1u);
    EXPECT_TRUE(j["suites"][0]["failures"].empty());
    EXPECT_GT(j["suites"][0]["tuples_checked"].get<int>(), 0);
  }
  const auto all = run({"identities"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.out, run({"identities"}).out);
  EXPECT_EQ(run({"identities", "--suite", "wz"}).code, 2);
}

TEST(CliAsymptotic, LimitAndErrors) {
  const auto r = run({"asymptotic", "--alpha", "2", "--beta", "2", "--gamma", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("limit 0.2756", 0), 0u);
  EXPECT_NE(r.out.find("strictly decreasing error: yes"), std::string::npos);
  const auto doubled = run({"asymptotic", "--alpha", "4", "--beta", "4", "--gamma", "2", "--t-list", "1,2"});
  EXPECT_EQ(doubled.out.substr(0, doubled.out.find('\n')), r.out.substr(0, r.out.find('\n')));
  const auto j = json::parse(run({"asymptotic", "--alpha", "2", "--beta", "2", "--gamma", "1", "--json"}).out);
  EXPECT_EQ(j["rows"].size(), 5u);
  EXPECT_TRUE(j["strictly_decreasing"].get<bool>());
  EXPECT_EQ(run({"asymptotic", "--alpha", "1", "--beta", "2", "--gamma", "1"}).code, 2);
  EXPECT_EQ(run({"asymptotic", "--alpha", "2", "--beta", "2", "--gamma", "1", "--t-list", "4,0"}).code, 2);
}

TEST(CliRender, FigureRegionIsDeterministic) {
  const auto a = scratch("fig.svg"), b = scratch("fig2.svg");
  EXPECT_EQ(run({"render", "--n", "3", "--N", "4", "--s", "2", "--out", a.string()}).code, 0);
  EXPECT_EQ(run({"render", "--n", "3", "--N", "4", "--s", "2", "--out", b.string()}).code, 0);
  const std::string svg = slurp(a);
  EXPECT_EQ(svg, slurp(b));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("<g id=\"removed\""), std::string::npos);
  // 32 rhombi in the tiling group, two shaded triangles
  const auto tiling = svg.substr(svg.find("<g id=\"tiling\""));
  EXPECT_EQ(std::count(tiling.begin(), tiling.end(), '\n') >= 32, true);
  const auto removed = svg.substr(svg.find("<g id=\"removed\""), svg.find("<g id=\"tiling\"") - svg.find("<g id=\"removed\""));
  std::size_t shaded = 0;
  for (std::size_t p = removed.find("<polygon"); p != std::string::npos; p = removed.find("<polygon", p + 1)) ++shaded;
  EXPECT_EQ(shaded, 2u);
}

TEST(CliRender, LowerHalfShowsHalfWeights) {
  const auto p = scratch("minus.svg");
  EXPECT_EQ(run({"render", "--n", "3", "--N", "4", "--s", "2", "--half", "minus", "--out", p.string()}).code, 0);
  const std::string svg = slurp(p);
  EXPECT_NE(svg.find("stroke-dasharray=\"4 3\""), std::string::npos);
  EXPECT_NE(svg.find(">1/2</text>"), std::string::npos);
  const auto q = scratch("plus.svg");
  EXPECT_EQ(run({"render", "--n", "3", "--N", "4", "--s", "2", "--half", "plus", "--out", q.string()}).code, 0);
  EXPECT_EQ(slurp(q).find("stroke-dasharray=\"4 3\""), std::string::npos);
}

TEST(CliRender, SingleRhombusAndUntileable) {
  const auto one = scratch("one.json"), bad = scratch("bad.json");
  std::ofstream(one) << R"({"label":"one","triangles":[[0,0,"u"],[0,0,"d"]],"half_edges":[]})";
  std::ofstream(bad) << R"({"label":"bad","triangles":[[0,0,"u"],[1,1,"d"]],"half_edges":[]})";
  const auto out1 = scratch("one.svg"), out2 = scratch("bad.svg");
  const auto r1 = run({"render", "--region", one.string(), "--out", out1.string()});
  EXPECT_EQ(r1.code, 0);
  EXPECT_NE(r1.out.find("2 triangles, 1 rhombi"), std::string::npos);
  const std::string svg = slurp(out1);
  std::size_t polys = 0;
  for (std::size_t p = svg.find("<polygon"); p != std::string::npos; p = svg.find("<polygon", p + 1)) ++polys;
  EXPECT_EQ(polys, 3u);
  const auto r2 = run({"render", "--region", bad.string(), "--out", out2.string()});
  EXPECT_EQ(r2.code, 0);
  EXPECT_NE(r2.err.find("warning"), std::string::npos);
  EXPECT_EQ(slurp(out2).find("<g id=\"tiling\""), std::string::npos);
  EXPECT_EQ(run({"render", "--n", "3", "--N", "4", "--s", "2"}).code, 2);
  EXPECT_EQ(run({"render", "--region", "/nonexistent.json", "--out", out2.string()}).code, 2);
}
