/*
   Copyright 2026 The mdsqcc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "mdsqcc/mdsqcc.hpp"

namespace commands = mdsqcc::commands;
using commands::RunConfig;
using mdsqcc::cosets::Family;

namespace {

RunConfig config(Family f, std::vector<std::uint64_t> qs) {
  RunConfig cfg;
  cfg.family = f;
  cfg.qs = std::move(qs);
  return cfg;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Table, FamilyOneRows) {
  const auto res = commands::cmd_table(config(Family::I, {11}));
  EXPECT_EQ(res.exit_code, 0);
  const auto lines = lines_of(res.output);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "q,i,n,k,mu,gamma,d_f,singleton,mds,valid");
  EXPECT_EQ(lines[1], "11,2,122,116,1,2,6,6,true,true");
  EXPECT_EQ(lines[4], "11,5,122,104,1,2,12,12,true,true");
}

TEST(Table, EmptyListGivesHeaderOnly) {
  const auto res = commands::cmd_table(config(Family::I, {}));
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.output, "q,i,n,k,mu,gamma,d_f,singleton,mds,valid\n");
}

TEST(Table, InvalidFieldSizeGivesWarningRow) {
  const auto res = commands::cmd_table(config(Family::II, {13, 23}));
  EXPECT_EQ(res.exit_code, 0);
  const auto lines = lines_of(res.output);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[1], "13,,,,,,,,,false");
  EXPECT_EQ(lines[2], "23,2,53,45,1,2,7,7,true,true");
  EXPECT_NE(res.diagnostics.find("m ≥ 2"), std::string::npos);
}

TEST(Table, OutputIsByteStable) {
  auto cfg = config(Family::I, {13, 7, 11});
  const auto a = commands::cmd_table(cfg);
  const auto b = commands::cmd_table(cfg);
  EXPECT_EQ(a.output, b.output);
  cfg.format = "json";
  EXPECT_EQ(commands::cmd_table(cfg).output, commands::cmd_table(cfg).output);
}

TEST(Construct, ExitCodesAndStableCertificate) {
  auto cfg = config(Family::I, {7});
  cfg.i = 2;
  const auto ok = commands::cmd_construct(cfg);
  EXPECT_EQ(ok.exit_code, 0);
  auto strip = [](const std::string& s) {
    auto j = nlohmann::ordered_json::parse(s);
    j.erase("timings_ms");
    return j.dump();
  };
  EXPECT_EQ(strip(ok.output), strip(commands::cmd_construct(cfg).output));

  auto bad = config(Family::II, {13});
  bad.i = 2;
  const auto rejected = commands::cmd_construct(bad);
  EXPECT_EQ(rejected.exit_code, 2);
  EXPECT_NE(rejected.diagnostics.find("m ≥ 2"), std::string::npos);

  auto budget = config(Family::I, {5});
  budget.i = 2;
  budget.level = 2;
  budget.budget = {1, 1};
  EXPECT_EQ(commands::cmd_construct(budget).exit_code, 3);

  auto missing = config(Family::I, {7});
  EXPECT_EQ(commands::cmd_construct(missing).exit_code, 2);
}

TEST(Cosets, DecompositionCounts) {
  const auto res = commands::cmd_cosets(config(Family::I, {5}));
  ASSERT_EQ(res.exit_code, 0);
  const auto j = nlohmann::json::parse(res.output);
  EXPECT_EQ(j["counts"]["singletons"], 2);
  EXPECT_EQ(j["counts"]["pairs"], 12);
  const auto two = nlohmann::json::parse(commands::cmd_cosets(config(Family::II, {23})).output);
  EXPECT_EQ(two["counts"]["singletons"], 1);
  EXPECT_EQ(two["counts"]["pairs"], 26);
  EXPECT_EQ(commands::cmd_cosets(config(Family::II, {7})).exit_code, 2);
}

TEST(Verify, BudgetOneSkipsOraclesButPasses) {
  RunConfig cfg;
  cfg.family = Family::I;
  cfg.qs = {5};
  cfg.level = 2;
  cfg.budget = {1, 1};
  cfg.format = "text";
  const auto res = commands::cmd_verify(cfg);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.output.find("SKIP  family I q=5 i=2  column_distance_oracle"), std::string::npos);
  EXPECT_EQ(res.output.find("FAIL"), std::string::npos);
}

TEST(Verify, LevelTwoRunsColumnOracle) {
  RunConfig cfg;
  cfg.qs = {5};
  cfg.level = 2;
  const auto res = commands::cmd_verify(cfg);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.output.find("PASS  family I q=5 i=2  column_distance_oracle: 65780 subsets"),
            std::string::npos);
}

TEST(Config, Validation) {
  RunConfig cfg = config(Family::I, {7});
  cfg.level = 3;
  EXPECT_EQ(commands::cmd_table(cfg).exit_code, 2);
  cfg.level = 1;
  cfg.budget.words = 0;
  EXPECT_EQ(commands::cmd_table(cfg).exit_code, 2);
  EXPECT_THROW(commands::parse_family("III"), mdsqcc::PreconditionError);
}
