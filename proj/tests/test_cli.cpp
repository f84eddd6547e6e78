#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wtau/cli.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "wtau");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = wtau::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("wtau_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, TauCutJoinJson) {
  const CliResult r = run({"tau", "--model", "kw", "--engine", "cutjoin", "--degree", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "wtau.tau/1");
  EXPECT_EQ(j["components"][3]["terms"][0]["monomial"], "q1^3");
  EXPECT_EQ(j["components"][3]["terms"][0]["coeff"], "1/6");
}

TEST(Cli, TauTextAndCsv) {
  const CliResult text = run({"tau", "--model", "bgw", "--degree", "1", "--out", "text", "--subst", "N=0"});
  ASSERT_EQ(text.code, 0) << text.err;
  EXPECT_EQ(text.out, "tau[0] = 1\ntau[1] = 1/16*q1\n");
  const CliResult csv = run({"tau", "--model", "kw", "--degree", "3", "--out", "csv"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(csv.out.substr(0, 21), "grade,monomial,coeff\n");
}

TEST(Cli, VerifySucceeds) {
  const CliResult r = run({"verify", "--model", "bgw", "--suite", "virasoro", "--degree", "8"});
  EXPECT_EQ(r.code, 0) << r.err << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "wtau.verify/1");
  EXPECT_TRUE(j["pass"].get<bool>());
  const CliResult all = run({"verify", "--model", "kw", "--degree", "7", "--out", "text"});
  EXPECT_EQ(all.code, 0) << all.err << all.out;
  const CliResult gkm = run({"verify", "--model", "gkm:2", "--suite", "hirota,reduction,sec5", "--degree", "6"});
  EXPECT_EQ(gkm.code, 0) << gkm.err << gkm.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, wtau::cli::kExitUsage);
  EXPECT_EQ(run({"tau"}).code, wtau::cli::kExitUsage);
  EXPECT_EQ(run({"tau", "--degree", "-1"}).code, wtau::cli::kExitUsage);
  EXPECT_EQ(run({"tau", "--degree", "3", "--model", "nope"}).code, wtau::cli::kExitUsage);
  EXPECT_EQ(run({"tau", "--degree", "3", "--model", "gkm:2", "--engine", "nodes"}).code,
            wtau::cli::kExitUsage);
  EXPECT_EQ(run({"tau", "--degree", "3", "--subst", "M=1"}).code, wtau::cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--degree", "3"}).code, wtau::cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, wtau::cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--model", "gkm:2", "--suite", "virasoro"}).code, wtau::cli::kExitUsage);
  EXPECT_EQ(run({"ops", "--which", "Y"}).code, wtau::cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, wtau::cli::kExitOk);
}

TEST(Cli, OpsText) {
  const CliResult r = run({"ops", "--model", "gkm:1", "--which", "R"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "-3/2*z^-3*D^2 + 3*z^-3*D - 5/8*z^-3 + 1/2*z^-6*D^3 - 15/4*z^-6*D^2 + 59/8*z^-6*D - "
            "45/16*z^-6\n");
  const CliResult w = run({"ops", "--model", "kw", "--which", "W", "--out", "json"});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(nlohmann::json::parse(w.out)["schema"], "wtau.ops/1");
}

TEST(Cli, Grassmannian) {
  const CliResult r = run({"grassmannian", "--model", "kw", "--count", "2", "--order", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "wtau.basis/1");
  EXPECT_EQ(j["basis"].size(), 2u);
  EXPECT_EQ(run({"grassmannian", "--adjoint", "--out", "text"}).code, 0);
}

TEST(Cli, OutputFileAndEnvironmentDirectory) {
  const auto dir = scratch_dir("out");
  const auto target = dir / "kw.json";
  ASSERT_EQ(run({"tau", "--degree", "3", "--output", target.string()}).code, 0);
  EXPECT_TRUE(std::filesystem::exists(target));
  EXPECT_FALSE(std::filesystem::exists(dir / "kw.json.tmp"));
  EXPECT_EQ(nlohmann::json::parse(slurp(target))["degree"], 3);

  setenv("WTAU_OUTPUT_DIR", dir.c_str(), 1);
  const CliResult rel = run({"tau", "--degree", "3", "--out", "csv", "--output", "sub/kw.csv"});
  unsetenv("WTAU_OUTPUT_DIR");
  ASSERT_EQ(rel.code, 0) << rel.err;
  EXPECT_TRUE(rel.out.empty());
  EXPECT_EQ(slurp(dir / "sub" / "kw.csv").substr(0, 21), "grade,monomial,coeff\n");
}

TEST(Cli, BinaryExitCodes) {
  const std::string exe = WTAU_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("tau --degree 3"), 0);
  EXPECT_EQ(status("tau --degree 3 --threads 2"), 0);
  EXPECT_EQ(status("tau"), 2);
  EXPECT_EQ(status("frobnicate"), 2);
}

TEST(Cli, OutputIndependentOfThreadCount) {
  const CliResult one = run({"--threads", "1", "tau", "--model", "bgw", "--degree", "8"});
  const CliResult four = run({"--threads", "4", "tau", "--model", "bgw", "--degree", "8"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.out, four.out);
  const CliResult gkm1 = run({"--threads", "1", "tau", "--model", "gkm:2", "--degree", "9", "--out", "csv"});
  const CliResult gkm4 = run({"--threads", "4", "tau", "--model", "gkm:2", "--degree", "9", "--out", "csv"});
  EXPECT_EQ(gkm1.out, gkm4.out);
}
