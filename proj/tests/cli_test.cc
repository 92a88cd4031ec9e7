// Copyright 2026 The circlefix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <fstream>
#include "json.hpp"
#include <sstream>

#include "circlefix/bounds.h"
#include "table.h"

namespace circlefix::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  EXPECT_TRUE(in.good()) << path;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(TableTest, GoldenFiles) {
  const auto rows = BuildTable(4, 30);
  EXPECT_EQ(RenderMarkdown(rows), ReadFile("golden/intro_table_4_30.md"));
  EXPECT_EQ(RenderCsv(rows), ReadFile("golden/intro_table_4_30.csv"));
  EXPECT_EQ(RenderJson(rows), ReadFile("golden/intro_table_4_30.json"));
}

TEST(TableTest, KnownRows) {
  const auto rows = BuildTable(4, 30);
  ASSERT_EQ(rows.size(), 14u);
  EXPECT_EQ(rows[0].possible_values, (std::vector<int64_t>{12, 24, 36}));
  EXPECT_EQ(rows[0].c1_zero_variant, (std::vector<int64_t>{24, 48, 72}));
  EXPECT_EQ(rows[1].possible_values, (std::vector<int64_t>{2, 4, 6}));
  EXPECT_EQ(rows[3].possible_values, (std::vector<int64_t>{24, 48, 72}));
  EXPECT_EQ(rows[6].possible_values, (std::vector<int64_t>{3, 6, 9}));
  EXPECT_EQ(rows[8].c1_zero_variant, (std::vector<int64_t>{24, 48, 72}));
  EXPECT_EQ(rows[10].possible_values, (std::vector<int64_t>{2, 4, 6}));
  for (const TableRow& row : rows) {
    EXPECT_EQ(row.kosniowski, row.dim / 4 + 1);
    EXPECT_EQ(row.hamiltonian, row.dim / 2 + 1);
  }
}

TEST(TableTest, FormatsRoundTrip) {
  const auto rows = BuildTable(4, 60);
  EXPECT_EQ(ParseCsv(RenderCsv(rows)), rows);
  EXPECT_EQ(ParseJson(RenderJson(rows)), rows);
  EXPECT_EQ(ParseMarkdown(RenderMarkdown(rows)), rows);
}

TEST(TableTest, BadRange) {
  EXPECT_THROW(BuildTable(30, 4), std::exception);
  EXPECT_THROW(BuildTable(3, 10), std::exception);
}

TEST(CliTest, BoundText) {
  const Result r = RunCli({"bound", "32"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("value: 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("branch: even/r=4/n-2-square\n"), std::string::npos);
}

TEST(CliTest, BoundWitnessAndC1Zero) {
  const Result r = RunCli({"bound", "10", "--c1-zero", "--witness"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("value: 24\n"), std::string::npos);
  EXPECT_NE(r.out.find("closed_form_value: 12\n"), std::string::npos);
  EXPECT_NE(r.out.find("witness: "), std::string::npos);
}

TEST(CliTest, BoundJsonMatchesLibrary) {
  for (int64_t n = 2; n <= 120; ++n) {
    const Result r = RunCli({"bound", std::to_string(n), "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    const BoundResult b = ClosedFormBound(n);
    EXPECT_EQ(j["value"].get<int64_t>(), b.value) << n;
    EXPECT_EQ(j["branch"].get<std::string>(), b.branch) << n;
    EXPECT_EQ(j["r"].get<int64_t>(), b.r) << n;
  }
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli({"bound", "1"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"bound", "abc"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"bound", "10", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"verify", "--max-m", "0"}).code, kExitUsage);
  const Result r = RunCli({"bound", "1"});
  EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << r.err;
}

TEST(CliTest, Divisibility) {
  const Result r = RunCli({"divisibility", "10", "--c1-zero"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("modulus_refined: 24\n"), std::string::npos);
}

TEST(CliTest, ChernFixtures) {
  const Result s6 = RunCli({"chern", "--profile", "fixtures/s6.json"});
  EXPECT_EQ(s6.code, kExitOk) << s6.err;
  EXPECT_NE(s6.out.find("c1cn1: 0\n"), std::string::npos);
  EXPECT_NE(s6.out.find("dim6_action: NonHamiltonian"), std::string::npos);

  const Result blowup = RunCli({"chern", "--profile", "fixtures/blowup.json"});
  EXPECT_EQ(blowup.code, kExitOk) << blowup.err;
  EXPECT_NE(blowup.out.find("total_fixed_points: 12\n"), std::string::npos);
  EXPECT_NE(blowup.out.find("c1cn1: 0\n"), std::string::npos);

  const Result bad = RunCli({"chern", "--profile", "fixtures/asymmetric.json"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("symmetry violated: N_0 = 1 but N_2 = 2"),
            std::string::npos);

  EXPECT_EQ(RunCli({"chern", "--profile", "fixtures/missing.json"}).code,
            kExitUsage);
}

TEST(CliTest, WitnessCommand) {
  const Result r = RunCli({"witness", "3", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("0"), std::string::npos);
}

TEST(CliTest, VerifySmall) {
  const Result r = RunCli({"verify", "--max-m", "30", "--lattice-max-n", "12"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

}  // namespace
}  // namespace circlefix::cli
