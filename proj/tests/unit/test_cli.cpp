#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <nlohmann/json.hpp>
#include <orthokern_cli/cli.hpp>

using nlohmann::json;
using orthokern::cli::parse_and_dispatch;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = parse_and_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

bool keys_sorted(const std::string& line) {
  // nlohmann::json keeps object keys in std::map order; check the raw text too
  const json j = json::parse(line);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  if (!std::is_sorted(keys.begin(), keys.end())) return false;
  std::size_t pos = 0;
  for (const auto& k : keys) {
    const std::size_t at = line.find("\"" + k + "\":", pos);
    if (at == std::string::npos) return false;
    pos = at;
  }
  return true;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("orthokern_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, VerifyMainJson) {
  const Outcome r = run({"verify", "main", "--lambda", "1,1", "--x", "1,0", "--r", "0.5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["identity"], "eq:main");
  EXPECT_DOUBLE_EQ(j["lhs"].get<double>(), 2.0);
  EXPECT_NEAR(j["rhs"].get<double>(), 2.0, 1e-12);
  EXPECT_LT(j["rel_err"].get<double>(), 1e-12);
  EXPECT_TRUE(keys_sorted(r.out.substr(0, r.out.find('\n'))));
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST(Cli, JsonParamsRoundTrip) {
  const Outcome r = run({"verify", "main", "--lambda", "0.3,2.5,1", "--x", "0.1,-0.7,0.25", "--r", "0.3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json p = json::parse(r.out)["params"];
  EXPECT_EQ(p["lambda"].get<std::vector<double>>(), (std::vector<double>{0.3, 2.5, 1.0}));
  EXPECT_EQ(p["x"].get<std::vector<double>>(), (std::vector<double>{0.1, -0.7, 0.25}));
  EXPECT_EQ(p["r"].get<double>(), 0.3);

  const Outcome k = run({"kernel", "ball", "--n", "3", "--d", "2", "--lambda", "0.1", "--mu", "1.7", "--x",
                     "0.123456789012345678,0.2", "--y", "0,0.3", "--json"});
  ASSERT_EQ(k.code, 0) << k.err;
  const json kp = json::parse(k.out)["params"];
  EXPECT_EQ(kp["x"][0].get<double>(), 0.123456789012345678);
  EXPECT_EQ(kp["mu"].get<double>(), 1.7);
  EXPECT_EQ(kp["n"].get<int>(), 3);
}

TEST(Cli, KernelBallDegreeZero) {
  const Outcome r = run({"kernel", "ball", "--n", "0", "--d", "2", "--lambda", "0.5", "--mu", "1", "--x", "0.1,0.2",
                     "--y", "0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("= 1\n"), std::string::npos) << r.out;
  const Outcome j = run({"kernel", "ball", "--n", "0", "--d", "2", "--lambda", "0.5", "--mu", "1", "--x", "0.1,0.2",
                     "--y", "0,0", "--closed", "--json"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_NEAR(json::parse(j.out)["value"].get<double>(), 1.0, 1e-13);
}

TEST(Cli, ClosedAndDirectAgree) {
  const std::vector<std::string> base{"kernel", "cube", "--n", "5", "--lambda", "0.5,1.5", "--x", "0.2,-0.4", "--json"};
  auto with = [&](const std::string& flag) {
    auto a = base;
    a.push_back(flag);
    const Outcome r = run(a);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out)["value"].get<double>();
  };
  EXPECT_NEAR(with("--closed"), with("--direct"), 1e-10);
  auto both = base;
  both.push_back("--closed");
  both.push_back("--direct");
  EXPECT_EQ(run(both).code, 2);
}

TEST(Cli, DomainErrorNamesPrecondition) {
  const Outcome r = run({"verify", "main", "--lambda", "-1,1", "--x", "0.5,0", "--r", "0.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("lambda_i > 0"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "main", "--lambda", "1,1", "--x", "1,0", "--r", "0.5", "--bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "main", "--lambda", "1,1", "--x", "1,0"}).code, 2);
  EXPECT_EQ(run({"kernel", "ball", "--n", "two", "--d", "2", "--lambda", "0.5", "--mu", "1", "--x", "0,0", "--y", "0,0"}).code,
            2);
  const Outcome r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("usage error"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TextModeCarriesTag) {
  const Outcome r = run({"verify", "gegen1", "--n", "4", "--lambda", "0.5", "--mu", "1", "--x", "0.25"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Thm 1.2 / eq:Gegen-1"), std::string::npos) << r.out;
}

TEST(Cli, EveryVerifyCommandRuns) {
  const std::vector<std::vector<std::string>> cmds{
      {"verify", "poisson", "--lambda", "0.7", "--mu", "1.2", "--s", "0.3", "--t", "-0.5", "--r", "0.4", "--json"},
      {"verify", "gegen2", "--n", "5", "--lambda", "0", "--mu", "1", "--x", "0.6", "--json"},
      {"verify", "addition", "--n", "4", "--lambda", "1", "--mu", "1", "--theta", "0.3", "--phi", "1.1", "--t", "0.2",
       "--s", "-0.4", "--json"},
      {"verify", "product", "--n", "6", "--lambda", "1.3", "--x", "0.2", "--y", "-0.7", "--json"},
      {"verify", "hermite-genocchi", "--xs", "0.1,0.5,0.9", "--f", "exp", "--json"},
  };
  for (const auto& c : cmds) {
    const Outcome r = run(c);
    ASSERT_EQ(r.code, 0) << c[1] << ": " << r.err;
    EXPECT_TRUE(keys_sorted(r.out.substr(0, r.out.find('\n')))) << r.out;
    EXPECT_LT(json::parse(r.out)["rel_err"].get<double>(), 1e-9) << c[1];
  }
  const Outcome g = run({"verify", "generating", "--lambda", "0.8", "--r", "0.3", "--t", "0.5", "--N", "60", "--json"});
  ASSERT_EQ(g.code, 0) << g.err;
  const json j = json::parse(g.out);
  for (const char* key : {"gegenbauer", "gegenbauer_tail_bound", "zonal", "zonal_tail_bound"}) EXPECT_TRUE(j.contains(key));
}

TEST(Cli, SweepCsv) {
  const std::string path = temp_path("sweep.csv");
  const Outcome r = run({"sweep", "critical", "--d", "2", "--lambda", "0.5", "--mu", "0.5", "--deltas", "1.25,2",
                     "--degrees", "0,4,8", "--csv", path, "--threads", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string one = slurp(path);
  EXPECT_EQ(one.substr(0, one.find('\n')), "delta,n,lebesgue,critical_value");
  EXPECT_EQ(std::count(one.begin(), one.end(), '\n'), 7);
  EXPECT_NE(one.find("\n1.25,0,"), std::string::npos) << one;

  const Outcome r4 = run({"sweep", "critical", "--d", "2", "--lambda", "0.5", "--mu", "0.5", "--deltas", "1.25,2",
                      "--degrees", "0,4,8", "--csv", path, "--threads", "4"});
  ASSERT_EQ(r4.code, 0);
  EXPECT_EQ(slurp(path), one);
  std::filesystem::remove(path);

  const Outcome bad = run({"sweep", "critical", "--d", "2", "--lambda", "0.5", "--mu", "0.5", "--deltas", "1",
                       "--degrees", "4", "--csv", "/nonexistent-dir/out.csv"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("/nonexistent-dir/out.csv"), std::string::npos);
}

TEST(Cli, ScanDeterministicAcrossThreads) {
  const std::vector<std::string> base{"scan", "cube-nonneg", "--n", "6", "--delta", "5", "--lambda", "0.5,0.5",
                                      "--grid", "9"};
  auto a = base, b = base;
  a.insert(a.end(), {"--threads", "1"});
  b.insert(b.end(), {"--threads", "3"});
  const Outcome ra = run(a), rb = run(b);
  ASSERT_EQ(ra.code, 0) << ra.err;
  EXPECT_EQ(ra.out, rb.out);
  EXPECT_EQ(ra.out.substr(0, ra.out.find('\n')), "x1,x2,value");
  EXPECT_EQ(std::count(ra.out.begin(), ra.out.end(), '\n'), 82);

  auto j = base;
  j.push_back("--json");
  const Outcome rj = run(j);
  ASSERT_EQ(rj.code, 0);
  EXPECT_GE(json::parse(rj.out)["min_value"].get<double>(), -1e-10);
}

TEST(Cli, CesaroCommands) {
  const Outcome g = run({"cesaro", "gegenbauer", "--n", "1", "--delta", "0", "--lambda", "1", "--s", "1", "--t", "1", "--json"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_NEAR(json::parse(g.out)["value"].get<double>(), 5.0, 1e-13);

  auto value = [](std::vector<std::string> a) {
    const Outcome r = run(a);
    EXPECT_EQ(r.code, 0) << r.err;
    return json::parse(r.out)["value"].get<double>();
  };
  const std::vector<std::string> cube{"cesaro", "cube", "--n", "4", "--delta", "2", "--lambda", "0.5,1", "--x", "0.3,0.1", "--json"};
  auto cc = cube, cd = cube;
  cc.push_back("--closed");
  cd.push_back("--direct");
  EXPECT_NEAR(value(cc), value(cd), 1e-9);

  const std::vector<std::string> ball{"cesaro", "ball", "--n", "4", "--delta", "2.5", "--d", "2", "--lambda", "0.6",
                                      "--mu", "0.9", "--x", "0.3,0.1", "--y", "-0.2,0.5", "--json"};
  auto bc = ball, bd = ball;
  bc.push_back("--closed");
  bd.push_back("--direct");
  EXPECT_NEAR(value(bc), value(bd), 1e-9);
}

TEST(Cli, QuadDump) {
  const Outcome r = run({"quad", "dump", "--kind", "jacobi", "--n", "3", "--alpha", "0.5", "--beta", "-0.25"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["nodes"].size(), 3u);
  EXPECT_EQ(j["exactness"].get<int>(), 5);
  EXPECT_EQ(run({"quad", "dump", "--kind", "hexagon", "--n", "3"}).code, 2);
  const Outcome b = run({"quad", "dump", "--kind", "ball", "--n", "2", "--d", "2", "--lambda", "0.5", "--mu", "1"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(json::parse(b.out)["nodes"][0].size(), 2u);
}

TEST(Cli, BinaryExitCodes) {
  const char* exe = std::getenv("ORTHOKERN_CLI");
  if (exe == nullptr) GTEST_SKIP() << "ORTHOKERN_CLI not set";
  auto status = [&](const std::string& args) {
    const int s = std::system((std::string(exe) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("verify main --lambda 1,1 --x 1,0 --r 0.5 --json"), 0);
  EXPECT_EQ(status("verify main --lambda -1,1 --x 1,0 --r 0.5"), 1);
  EXPECT_EQ(status("verify main --lambda 1,1 --x 1,0 --r 0.5 --nope"), 2);
}
