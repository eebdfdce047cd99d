#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "circunit/cli.hpp"
#include "circunit/io.hpp"

using namespace circunit;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "circunit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, VerifyDefault) {
  const auto r = run_args({"verify"});
  EXPECT_EQ(r.code, kOk);
  for (int n = 4; n <= 7; ++n) EXPECT_NE(r.out.find("n=" + std::to_string(n) + " "), std::string::npos);
  EXPECT_EQ(r.out.find("trivial_only=false"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_args({"verify", "--n", "3"}).code, kUsage);
  EXPECT_EQ(run_args({"verify", "--n", "8"}).code, kUsage);
  EXPECT_EQ(run_args({"verify", "--n", "13"}).code, kUsage);
  EXPECT_EQ(run_args({"bogus"}).code, kUsage);
  EXPECT_EQ(run_args({}).code, kUsage);
  EXPECT_EQ(run_args({"unit", "--n", "4", "--word", "d2"}).code, kUsage);
  EXPECT_EQ(run_args({"unit", "--n", "4", "--word", "d1^"}).code, kUsage);
}

TEST(Cli, TablesN5) {
  const auto r = run_args({"tables", "--n", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("r: 0 r_1 r_2 r_3 0 r_3 r_2 r_1\n"), std::string::npos);
  EXPECT_NE(r.out.find("s: 0 s_1 s_2 s_3 sqrt2 s_5 s_6 s_7 0 s_7 s_6 s_5 sqrt2 s_3 s_2 s_1\n"), std::string::npos);
  const auto j = run_args({"tables", "--n", "5", "--json"});
  EXPECT_EQ(j.code, kOk);
  EXPECT_TRUE(Json::accept(j.out));
}

TEST(Cli, VerifyJsonIsReproducible) {
  const auto dir = std::filesystem::temp_directory_path() / "circunit_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json", b = dir / "b.json";
  EXPECT_EQ(run_args({"verify", "--n", "6", "--json", a.string(), "--no-timing"}).code, kOk);
  EXPECT_EQ(run_args({"verify", "--n", "6", "--json", b.string(), "--no-timing"}).code, kOk);
  const auto ta = slurp(a);
  EXPECT_FALSE(ta.empty());
  EXPECT_EQ(ta, slurp(b));
  const auto j = Json::parse(ta);
  EXPECT_EQ(j["n"], "6");
  EXPECT_EQ(j["rank"], "8");
  EXPECT_EQ(j["verdict"]["trivial_only"], true);
  EXPECT_EQ(j["generators"].size(), 8U);
  EXPECT_TRUE(j.contains("matrix_rows_hex"));
  EXPECT_TRUE(j.contains("elapsed_ms"));

  const auto stdout_run = run_args({"verify", "--n", "5", "--json", "-", "--no-timing"});
  EXPECT_EQ(stdout_run.code, kOk);
  EXPECT_EQ(stdout_run.out, run_args({"verify", "--n", "5", "--json", "-", "--no-timing"}).out);

  EXPECT_EQ(run_args({"verify", "--json", dir.string(), "--no-timing"}).code, kOk);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".json";
  EXPECT_GE(files, 6U);
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyExplore) {
  const auto r = run_args({"verify", "--n", "8", "--explore", "--json", "-", "--no-timing"});
  EXPECT_EQ(r.code, kOk);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["exploratory"], true);
  EXPECT_EQ(j["verdict"]["trivial_only"], true);
}

TEST(Cli, Unit) {
  const auto bad = run_args({"unit", "--n", "4", "--word", "d1"});
  EXPECT_EQ(bad.code, kNegative);
  EXPECT_NE((bad.out + bad.err).find("NotIntegral"), std::string::npos);
  const auto ok = run_args({"unit", "--n", "4", "--word", "d1^4", "--json"});
  EXPECT_EQ(ok.code, kOk);
  const auto j = Json::parse(ok.out);
  EXPECT_EQ(j["gammas"].size(), 16U);
  EXPECT_EQ(j["gammas"][0], "10");
  EXPECT_EQ(run_args({"unit", "--n", "5", "--word", "a^16"}).code, kOk);
}

TEST(Cli, FunnelAndIdentities) {
  const auto f = run_args({"funnel", "--n", "5"});
  EXPECT_EQ(f.code, kOk);
  EXPECT_TRUE(Json::accept(f.out));
  const auto i = run_args({"identities", "--n", "6"});
  EXPECT_EQ(i.code, kOk);
  EXPECT_EQ(i.out.find("FAIL"), std::string::npos);
  EXPECT_NE(i.out.find("PASS"), std::string::npos);
}
