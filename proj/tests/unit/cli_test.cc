// Copyright 2026 The TopKAT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.h"
#include "cli/commands.h"

namespace topkat::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempFile(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() /
              ("topkat_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(CliTest, EquivExitCodes) {
  EXPECT_EQ(Cli({"equiv", "p", "p"}).code, kExitHolds);
  EXPECT_EQ(Cli({"equiv", "--actions", "p", "--tests", "", "top;p",
                 "top;p;top;p"}).code,
            kExitRefuted);
  EXPECT_EQ(Cli({"equiv", "p;(q + r)", "p;q + p;r"}).code, kExitHolds);
  EXPECT_EQ(Cli({"equiv", "(p + q)*", "p*;(q;p*)*"}).code, kExitHolds);
  EXPECT_EQ(Cli({"equiv", "p;top;q", "top"}).code, kExitRefuted);
}

TEST(CliTest, LeqExitCodes) {
  EXPECT_EQ(Cli({"leq", "p", "p;top;p"}).code, kExitRefuted);
  EXPECT_EQ(Cli({"leq", "p", "top"}).code, kExitHolds);
  EXPECT_EQ(Cli({"leq", "fail;p", "fail"}).code, kExitHolds);
}

TEST(CliTest, AlphabetInference) {
  CliRun r = Cli({"equiv", "--format", "json", "~b;p", "p;~c"});
  ASSERT_EQ(r.code, kExitRefuted) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["alphabet"]["actions"], nlohmann::json::array({"p"}));
  EXPECT_EQ(j["alphabet"]["tests"], nlohmann::json::array({"b", "c"}));

  // Declared symbols override inference; undeclared ones are errors.
  EXPECT_EQ(Cli({"equiv", "--tests", "b", "b;b", "b"}).code, kExitHolds);
  EXPECT_EQ(Cli({"equiv", "--actions", "p", "--tests", "", "q", "q"}).code,
            kExitError);
}

TEST(CliTest, AlphabetFile) {
  std::string path =
      TempFile("alphabet.txt", "# header\nactions: p q\ntests: b\n");
  EXPECT_EQ(Cli({"equiv", "--alphabet", path, "b;b", "b"}).code, kExitHolds);
  EXPECT_EQ(Cli({"equiv", "--alphabet", "/nonexistent/a.json", "p", "p"}).code,
            kExitError);
}

TEST(CliTest, Triples) {
  EXPECT_EQ(Cli({"triple", "[b] b;1 + ~b;q [ok: b]"}).code, kExitHolds);
  EXPECT_EQ(Cli({"triple", "[1] (b;p)*;~b [ok: ~b]"}).code, kExitHolds);
  EXPECT_EQ(Cli({"triple", "--form", "kozen", "{1} (b;p)*;~b {~b}"}).code,
            kExitHolds);
  EXPECT_EQ(Cli({"triple", "[b] p [ok: c]"}).code, kExitRefuted);
  EXPECT_EQ(Cli({"triple", "--form", "F3", "[b] 0 [ok: 0]"}).code, kExitHolds);
  EXPECT_EQ(Cli({"triple", "--form", "bogus", "[b] p [ok: c]"}).code,
            kExitError);
  EXPECT_EQ(Cli({"triple", "[b] p [ok: c"}).code, kExitError);
}

TEST(CliTest, TripleModelStrategy) {
  std::string u = TempFile(
      "u.json",
      R"({"states": 2, "actions": {"p": [[0, 1]]}, "tests": {"b": [0], "c": [1]}})");
  std::string u0 = TempFile(
      "u0.json",
      R"({"states": 2, "actions": {"p": []}, "tests": {"b": [0], "c": [1]}})");
  EXPECT_EQ(Cli({"triple", "--strategy", "model", "--model", u,
                 "[b] p [ok: c]"}).code,
            kExitHolds);
  EXPECT_EQ(Cli({"triple", "--strategy", "model", "--model", u0,
                 "[b] p [ok: c]"}).code,
            kExitRefuted);
  EXPECT_EQ(Cli({"triple", "--strategy", "model", "[b] p [ok: c]"}).code,
            kExitError);
}

TEST(CliTest, RulesByFigure) {
  for (const char* fig : {"1", "3"}) {
    CliRun r = Cli({"rules", "--figure", fig, "--models", "100"});
    EXPECT_EQ(r.code, kExitHolds) << r.out << r.err;
  }
  EXPECT_EQ(Cli({"rules", "--figure", "2"}).code, kExitError);
}

TEST(CliTest, Examples) {
  CliRun r = Cli({"examples"});
  EXPECT_EQ(r.code, kExitHolds) << r.out;
  EXPECT_NE(r.out.find("all 9 examples reproduce"), std::string::npos);
}

TEST(CliTest, OracleOnIncompletenessPair) {
  CliRun r = Cli({"oracle", "--bound", "4", "--format", "json", "top;p",
               "top;p;top;p"});
  ASSERT_EQ(r.code, kExitRefuted) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["bounded_equal"].get<bool>());
  EXPECT_EQ(j["difference_length"], 1);
  EXPECT_TRUE(j["consistent"].get<bool>());
  EXPECT_EQ(Cli({"oracle", "--bound", "4", "p;(q + r)", "p;q + p;r"}).code,
            kExitHolds);
  EXPECT_EQ(Cli({"oracle", "--bound", "11", "p", "p"}).code, kExitError);
}

TEST(CliTest, ModelSearch) {
  EXPECT_EQ(Cli({"model-search", "p = p;p"}).code, kExitRefuted);
  EXPECT_EQ(Cli({"model-search", "--max-states", "3",
                 "top;p = top;p;top;p"}).code,
            kExitHolds);
  EXPECT_EQ(Cli({"model-search", "--random", "--top", "explicit", "--models",
                 "2000", "--min-states", "2", "--max-states", "3",
                 "top;p <= top;p;top;p"}).code,
            kExitRefuted);
  EXPECT_EQ(Cli({"model-search", "--top", "explicit", "p = p"}).code,
            kExitError);
  EXPECT_EQ(Cli({"model-search", "--min-states", "3", "--max-states", "2",
                 "p = p"}).code,
            kExitError);
}

TEST(CliTest, JsonSchemaAndDeterminism) {
  std::vector<std::string> args = {"model-search", "--random", "--seed", "7",
                                   "--format", "json", "p;q = q;p"};
  CliRun a = Cli(args), b = Cli(args);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["schema"], kJsonSchema);
  EXPECT_EQ(j["params"]["seed"], 7);
  std::vector<std::string> jobs = args;
  jobs.insert(jobs.begin() + 1, {"--jobs", "3"});
  EXPECT_EQ(Cli(jobs).out, a.out);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitError);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitError);
  EXPECT_EQ(Cli({"equiv", "p"}).code, kExitError);
  EXPECT_EQ(Cli({"equiv", "p +", "p"}).code, kExitError);
  EXPECT_EQ(Cli({"--help"}).code, kExitHolds);
}

}  // namespace
}  // namespace topkat::cli
