#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wreath::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int want_code = 0) {
  auto res = run(std::move(args));
  EXPECT_EQ(res.code, want_code) << res.err;
  return json::parse(res.out);
}

std::string data(const char* name) { return (std::filesystem::path(WREATH_TEST_DATA) / name).string(); }

// Runs the installed binary and captures stdout.
std::string shell(const std::string& args) {
  std::string cmd = std::string("\"") + WREATH_CLI_PATH + "\" " + args;
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

}  // namespace

TEST(CliStats, CustomOrderExample) {
  auto j = run_json({"stats", "--r", "3", "--n", "3", "--order", "custom:" + data("ex28.json"), "3^1 1^2 2^2"});
  const auto& p = j["permutation"];
  EXPECT_EQ(p["des"], 2);
  EXPECT_EQ(p["maj"], 1);
  EXPECT_EQ(p["inv"], 1);
  EXPECT_EQ(p["len"], 9);
  EXPECT_EQ(p["des_set"], (json{0, 1}));
  EXPECT_EQ(j["order"]["positive_dominant"], true);
}

TEST(CliStats, InverseWindow) {
  auto j = run_json({"stats", "--r", "4", "--n", "7", "--order", "ar", "5^2 2^3 4 3^1 7^2 1 6^1"});
  EXPECT_EQ(j["permutation"]["col"], 9);
  EXPECT_EQ(j["inverse"]["window"], "6 2^3 4^1 3 1^2 7^1 5^2");
  EXPECT_EQ(j["inverse"]["col"], 9);
}

TEST(CliStats, IdentityIsAllZero) {
  auto j = run_json({"stats", "--r", "2", "1 2 3"});
  for (const char* k : {"des", "maj", "inv", "len", "col"}) EXPECT_EQ(j["permutation"][k], 0) << k;
}

TEST(CliStats, Csv) {
  auto res = run({"stats", "--format", "csv", "2 1"});
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out, "which,window,des,maj,inv,len,col\npermutation,2 1,1,1,1,1,0\ninverse,2 1,1,1,1,1,0\n");
}

TEST(CliStats, UsageErrors) {
  EXPECT_EQ(run({"stats", "0^1 1"}).code, 2);
  EXPECT_EQ(run({"stats", "--r", "2", "1^2"}).code, 2);
  EXPECT_EQ(run({"stats", "1 1"}).code, 2);
  EXPECT_EQ(run({"stats", "--order", "nope", "1"}).code, 2);
  EXPECT_EQ(run({"stats", "--n", "3", "1 2"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliBijection, Phi) {
  auto j = run_json({"bijection", "phi", "--order", "ar", "--r", "3", "--n", "6", "4^2 3^1 0 2^2 4^1 3^1"});
  EXPECT_EQ(j["gamma"], "3 4^2 2^1 6^1 1^2 5^1");
  EXPECT_EQ(j["lambda"], (json{0, 1, 2, 2, 2, 2}));
  EXPECT_EQ(j["roundtrip"], true);
  EXPECT_EQ(j["max"]["holds"], true);
  EXPECT_EQ(j["weight"]["f"], 16);
  EXPECT_EQ(j["weight"]["lambda"], 9);

  auto b = run_json({"bijection", "phi", "--order", "bz", "--r", "3", "4^2 3^1 0 2^2 4^1 3^1"});
  EXPECT_EQ(b["lambda"], (json{0, 1, 1, 1, 1, 1}));
  EXPECT_EQ(b["des"], 3);
  EXPECT_EQ(b["maj"], 7);

  auto z = run_json({"bijection", "phi", "0 0 0"});
  EXPECT_EQ(z["gamma"], "1 2 3");
  EXPECT_EQ(z["lambda"], (json{0, 0, 0}));
}

TEST(CliBijection, PhiNeedsPositiveDominance) {
  EXPECT_EQ(run({"bijection", "phi", "--order", "reiner", "--r", "2", "1^1 0"}).code, 1);
}

TEST(CliBijection, Block) {
  auto e = run_json({"bijection", "block", "--r", "3", "--comp", "2,2,2", "3 6 1^2 4^1 5^1 2"});
  EXPECT_EQ(e["sequence"], "1^2 2 0 1^1 2^1 0");
  EXPECT_EQ(e["roundtrip"], true);
  auto d = run_json({"bijection", "block", "--order", "bz", "2^2 2 0 1^1 1^1 0"});
  EXPECT_EQ(d["gamma"], "3 6 5^1 4^1 1^2 2");
  EXPECT_EQ(d["composition"], (json{2, 2, 2}));
  EXPECT_EQ(run({"bijection", "block", "--comp", "1,2", "1 3 2"}).code, 1);
  EXPECT_EQ(run({"bijection", "block", "--comp", "1,0", "1"}).code, 2);
}

TEST(CliBijection, Psi) {
  auto j = run_json({"bijection", "psi", "--from", "bz", "--to", "ar", "2^2 2 0 1^1 1^1 0"});
  EXPECT_EQ(j["image"]["sequence"], "1^2 2 0 1^1 2^1 0");
  EXPECT_EQ(j["input"]["len"], 19);
  EXPECT_EQ(j["image"]["len"], 19);
  EXPECT_EQ(j["image"]["inv"], 8);
  EXPECT_EQ(j["image"]["col"], 4);
  EXPECT_EQ(j["preserved"], true);

  auto same = run_json({"bijection", "psi", "--from", "ar", "--to", "ar", "1^1 0 2"});
  EXPECT_EQ(same["image"]["sequence"], "1^1 0 2");
}

TEST(CliBijection, Bipartite) {
  auto j = run_json({"bijection", "bipartite", "--r", "3", "0 1 1 1 | 2 2^2 2^1 3^1"});
  EXPECT_EQ(j["lambda"], (json{0, 1, 1, 1}));
  EXPECT_EQ(j["mu"], (json{2, 2, 2, 3}));
  EXPECT_EQ(j["roundtrip"], true);
  // Colored first bottom entry over a zero: 0 is a descent of the inverse, so top row fails.
  auto shown = run_json({"bijection", "bipartite", "--r", "3", "0 1 1 1 | 2^1 2^2 2^2 3^1"}, 1);
  EXPECT_EQ(shown["compatibility"]["lambda_gamma_inverse"], false);
  // A literal member whose top row is not compatible with the inverse.
  auto k = run_json({"bijection", "bipartite", "--r", "2", "0 | 1^1"}, 1);
  EXPECT_EQ(k["compatibility"]["lambda_gamma_inverse"], false);
  EXPECT_TRUE(k.contains("merge_error"));
  EXPECT_EQ(run({"bijection", "bipartite", "--rule", "anchored", "--r", "2", "0 | 1^1"}).code, 1);
  EXPECT_EQ(run({"bijection", "bipartite", "0 1"}).code, 2);
}

TEST(CliVerify, PassingIdentities) {
  EXPECT_EQ(run_json({"verify", "carlitz", "--n", "0"})["outcome"], "pass");
  EXPECT_EQ(run_json({"verify", "lemma43", "--r", "2", "--n", "3", "--order", "random:42"})["outcome"], "pass");
  EXPECT_EQ(run_json({"verify", "gg2", "--n", "2", "--k1", "2"})["outcome"], "pass");
  EXPECT_EQ(run_json({"verify", "four", "--r", "2", "--n", "2", "--t-cap", "2", "--order", "bz"})["outcome"], "pass");
  EXPECT_EQ(run_json({"verify", "fiber", "--order", "ar", "--eta", "3 4^2 2^1 6^1 1^2 5^1", "--t-cap", "2"})["outcome"],
            "pass");
  EXPECT_EQ(run_json({"verify", "bipartite-gf", "--r", "2", "--n", "3"})["outcome"], "pass");
  EXPECT_EQ(run_json({"verify", "lemma43", "--r", "2", "--comp", "1,1"})["outcome"], "pass");
}

TEST(CliVerify, SixAsPrintedReportsWitness) {
  auto j = run_json({"verify", "six", "--r", "2", "--n", "1", "--k1", "1", "--k2", "1"}, 1);
  EXPECT_EQ(j["outcome"], "fail");
  EXPECT_EQ(j["witness"]["context"], (json{{"k1", 0}, {"k2", 0}}));
  auto a = run_json({"verify", "six", "--r", "2", "--n", "2", "--k1", "2", "--k2", "2", "--columns", "anchored"});
  EXPECT_EQ(a["outcome"], "pass");
  // Exploratory runs report but never fail the exit code.
  auto x = run({"verify", "six", "--r", "2", "--n", "2", "--k1", "1", "--k2", "1", "--order", "bz", "--exploratory"});
  EXPECT_EQ(x.code, 0);
  EXPECT_EQ(run({"verify", "six", "--r", "2", "--n", "2", "--order", "bz"}).code, 2);
}

TEST(CliVerify, NegativeControlExitsOne) {
  // Corrupted A-R(2,3): 1 swapped with the top colored entry 3^1.
  auto path = std::filesystem::temp_directory_path() / "wreath_cli_corrupt.json";
  std::ofstream(path) << "[[1,1],[2,1],[1,0],[0,0],[3,1],[2,0],[3,0]]";
  auto j = run_json({"verify", "lemma43", "--r", "2", "--n", "3", "--order", "custom:" + path.string()}, 1);
  std::filesystem::remove(path);
  EXPECT_EQ(j["outcome"], "fail");
  EXPECT_EQ(j["params"]["order"]["positive_dominant"], false);
}

TEST(CliVerify, GuardAndTiming) {
  EXPECT_EQ(run({"verify", "four", "--r", "3", "--n", "9"}).code, 2);
  auto j = run_json({"verify", "carlitz", "--n", "1", "--timing"});
  EXPECT_TRUE(j.contains("wall_ms"));
  EXPECT_FALSE(run_json({"verify", "carlitz", "--n", "1"}).contains("wall_ms"));
  EXPECT_EQ(run({"verify", "nothing"}).code, 2);
  EXPECT_EQ(run({"verify", "six", "--columns", "weird"}).code, 2);
}

TEST(CliDist, CsvAndJson) {
  auto res = run({"dist", "--r", "1", "--n", "2", "--stats", "des", "--format", "csv"});
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out, "des,count\n0,1\n1,1\n");
  auto j = run_json({"dist", "--r", "2", "--n", "1", "--stats", "des,maj,col"});
  EXPECT_EQ(j["series"]["terms"].size(), 2u);
  EXPECT_EQ(run({"dist", "--stats", "des,bogus"}).code, 2);
}

TEST(CliDist, OutputFile) {
  auto path = std::filesystem::temp_directory_path() / "wreath_cli_out.csv";
  auto res = run({"dist", "--r", "1", "--n", "2", "--stats", "des", "--format", "csv", "--output", path.string()});
  EXPECT_EQ(res.code, 0);
  EXPECT_TRUE(res.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::filesystem::remove(path);
  EXPECT_EQ(ss.str(), "des,count\n0,1\n1,1\n");
}

TEST(CliBinary, ByteStableAcrossRunsAndThreads) {
  const std::string dist = "dist --r 3 --n 4 --order bz --stats des,maj,len,col,des_inv,col_inv ";
  auto a = shell(dist + "--threads 1");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, shell(dist + "--threads 1"));
  EXPECT_EQ(a, shell(dist + "--threads 4"));

  const std::string four = "verify four --r 2 --n 3 --t-cap 2 --order random:3 ";
  auto b = shell(four + "--threads 1");
  EXPECT_NE(b.find("\"outcome\": \"pass\""), std::string::npos);
  EXPECT_EQ(b, shell(four + "--threads 3"));
}
