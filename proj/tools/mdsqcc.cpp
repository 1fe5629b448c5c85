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

// mdsqcc: certify MDS quantum convolutional codes from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mdsqcc/commands.hpp"

namespace {

using mdsqcc::commands::RunConfig;
using mdsqcc::nt::u64;

struct Flags {
  std::string family;
  std::vector<u64> q;
  std::string q_list;
  std::optional<u64> i;
  std::string i_range;
  int level = 1;
  u64 budget_ranks = 100'000'000;
  u64 budget_words = 100'000'000;
  std::string out;
  std::string format;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--family", f.family, "code family")->check(CLI::IsMember({"I", "II"}));
  cmd->add_option("--q", f.q, "field size (odd prime power)");
  cmd->add_option("--q-list", f.q_list, "comma-separated field sizes");
  cmd->add_option("--i", f.i, "family index");
  cmd->add_option("--i-range", f.i_range, "index range LO..HI or LO-HI");
  cmd->add_option("--level", f.level, "verification level")->check(CLI::Range(0, 2));
  cmd->add_option("--budget-ranks", f.budget_ranks, "column-subset budget for level 2")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-words", f.budget_words, "dual-codeword budget for level 2")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", f.out, "write output to this path");
  cmd->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

std::vector<u64> parse_list(const std::string& s) {
  std::vector<u64> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long long v = std::stoull(item, &used);
    if (used != item.size()) throw mdsqcc::PreconditionError("bad q-list entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::pair<u64, u64> parse_range(const std::string& s) {
  auto dots = s.find("..");
  std::size_t skip = 2;
  if (dots == std::string::npos) {
    dots = s.find('-');
    skip = 1;
  }
  if (dots == std::string::npos) throw mdsqcc::PreconditionError("i-range must be LO..HI");
  try {
    return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + skip))};
  } catch (const std::exception&) {
    throw mdsqcc::PreconditionError("i-range must be LO..HI, got '" + s + "'");
  }
}

RunConfig to_config(const std::string& command, const Flags& f) {
  RunConfig cfg;
  cfg.command = command;
  if (!f.family.empty()) cfg.family = mdsqcc::commands::parse_family(f.family);
  cfg.qs = f.q;
  try {
    for (u64 q : parse_list(f.q_list)) cfg.qs.push_back(q);
  } catch (const std::invalid_argument&) {
    throw mdsqcc::PreconditionError("bad q-list '" + f.q_list + "'");
  }
  cfg.i = f.i;
  if (!f.i_range.empty()) cfg.i_range = parse_range(f.i_range);
  cfg.level = f.level;
  cfg.budget.rank_checks = f.budget_ranks;
  cfg.budget.words = f.budget_words;
  cfg.out = f.out;
  cfg.format = f.format;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MDS quantum convolutional codes from constacyclic codes"};
  app.require_subcommand(1);
  Flags flags;
  auto* construct = app.add_subcommand("construct", "certify one code");
  auto* table = app.add_subcommand("table", "parameter table for a family");
  auto* cosets = app.add_subcommand("cosets", "q^2-cyclotomic coset decomposition");
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  for (auto* cmd : {construct, table, cosets, verify}) add_common(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : mdsqcc::commands::kPrecondition;
  }

  mdsqcc::commands::CommandResult res;
  try {
    const std::string name = app.get_subcommands().front()->get_name();
    const RunConfig cfg = to_config(name, flags);
    if (name == "construct") res = mdsqcc::commands::cmd_construct(cfg);
    else if (name == "table") res = mdsqcc::commands::cmd_table(cfg);
    else if (name == "cosets") res = mdsqcc::commands::cmd_cosets(cfg);
    else res = mdsqcc::commands::cmd_verify(cfg);
  } catch (const mdsqcc::PreconditionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return mdsqcc::commands::kPrecondition;
  }

  std::cerr << res.diagnostics;
  if (!flags.out.empty() && !res.output.empty()) {
    std::ofstream file(flags.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << flags.out << "\n";
      return mdsqcc::commands::kPrecondition;
    }
    file << res.output;
  } else {
    std::cout << res.output;
  }
  return res.exit_code;
}
