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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <map>
#include <tuple>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mdsqcc/block.hpp"
#include "mdsqcc/commands.hpp"
#include "mdsqcc/conv.hpp"
#include "mdsqcc/cosets.hpp"
#include "mdsqcc/invariants.hpp"
#include "mdsqcc/quantum.hpp"

namespace {

using namespace mdsqcc;
using cosets::Family;
using nt::u64;

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Expect {
 public:
  void that(bool cond, const std::string& what) {
    ++checked_;
    if (!cond && failures_.size() < 5) failures_.push_back(what);
    failed_ += !cond;
  }
  Outcome outcome(const std::string& summary) const {
    if (failed_ == 0) return {true, summary + " (" + std::to_string(checked_) + " assertions)"};
    std::string d = std::to_string(failed_) + " of " + std::to_string(checked_) + " assertions failed:";
    for (const auto& f : failures_) d += " [" + f + "]";
    return {false, d};
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);  // header
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::string params_row(u64 q, u64 i, u64 n, u64 k, u64 d) {
  return std::to_string(q) + "," + std::to_string(i) + "," + std::to_string(n) + "," +
         std::to_string(k) + ",1,2," + std::to_string(d) + "," + std::to_string(d) + ",true,true";
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

// Every in-range (family, q <= 27, i).
std::vector<std::tuple<Family, u64, u64>> all_cases() {
  std::vector<std::tuple<Family, u64, u64>> out;
  for (u64 q = 3; q <= 27; q += 2) {
    if (!nt::is_odd_prime_power(q)) continue;
    for (Family f : {Family::I, Family::II})
      for (u64 i = 2; i <= quantum::max_index(f, q); ++i) out.emplace_back(f, q, i);
  }
  return out;
}

Outcome table_one() {
  commands::RunConfig cfg;
  cfg.family = Family::I;
  cfg.qs = {7, 11, 13, 19, 23};
  cfg.level = 1;
  const auto res = commands::cmd_table(cfg);
  Expect e;
  e.that(res.exit_code == 0, "exit code " + std::to_string(res.exit_code));
  std::vector<std::string> expected;
  for (u64 q : cfg.qs)
    for (u64 i = 2; i <= (q - 1) / 2; ++i)
      expected.push_back(params_row(q, i, q * q + 1, q * q - 4 * i + 3, 2 * i + 2));
  const auto got = data_lines(res.output);
  e.that(got.size() == 29, "row count " + std::to_string(got.size()));
  e.that(got == expected, "rows differ from the closed forms");
  for (const auto& row : csv_rows(res.output))
    e.that(row.size() == 10 && row[8] == "true" && row[9] == "true", "row not valid/mds");
  return e.outcome("29 rows [(q^2+1, q^2-4i+3, 1; 2, 2i+2)]_q, all valid and MDS");
}

Outcome table_two() {
  commands::RunConfig cfg;
  cfg.family = Family::II;
  cfg.qs = {23, 27, 37};
  cfg.level = 1;
  const auto res = commands::cmd_table(cfg);
  Expect e;
  e.that(res.exit_code == 0, "exit code " + std::to_string(res.exit_code));
  std::vector<std::string> expected;
  for (u64 q : {23u, 27u, 37u}) {
    const u64 n = (q * q + 1) / 10;
    for (u64 i = 2; i <= 2 * (q / 10) - 1; ++i)
      expected.push_back(params_row(q, i, n, n - 4 * i, 2 * i + 3));
  }
  e.that(data_lines(res.output) == expected, "rows differ from the closed forms");
  e.that(expected.size() == 8, "expected 2 + 2 + 4 rows");
  const auto note_at = res.diagnostics.find("note: q = 37");
  e.that(note_at != std::string::npos &&
             res.diagnostics.find("printed with q=13", note_at) != std::string::npos,
         "missing q=37 erratum note");

  commands::RunConfig bad;
  bad.family = Family::II;
  bad.qs = {13};
  bad.i = 2;
  const auto rejected = commands::cmd_construct(bad);
  e.that(rejected.exit_code == 2, "q=13 exit code " + std::to_string(rejected.exit_code));
  e.that(rejected.diagnostics.find("m ≥ 2") != std::string::npos, "q=13 message lacks m ≥ 2");
  return e.outcome("q=23, 27 rows i=2..3, q=37 rows i=2..5 with erratum note, q=13 rejected");
}

Outcome block_mds() {
  Expect e;
  {
    auto tower = quantum::tower_for(5);
    const auto ctx = cosets::CosetContext::family_one(5);
    const auto code = block::build_code(tower, cosets::defining_set_family_I(ctx, 2));
    e.that(code.length() == 26 && code.dimension() == 21, "q=5 code is not [26, 21]");
    const auto five = block::certify_distance_columns(code, 5, 100'000'000);
    e.that(five.passed && five.subsets == 65780, "q=5 w=5 oracle");
    const auto six = block::certify_distance_columns(code, 6, 100'000'000);
    e.that(!six.passed, "q=5 w=6 should find a dependent subset");
  }
  {
    auto tower = quantum::tower_for(23);
    const auto ctx = cosets::CosetContext::family_two(23);
    const auto code = block::build_code(tower, cosets::defining_set_family_II(ctx, 2));
    e.that(code.length() == 53 && code.dimension() == 47, "q=23 code is not [53, 47]");
    const auto five = block::certify_distance_columns(code, 5, 100'000'000);
    e.that(five.passed && five.subsets == 2869685, "q=23 w=5 oracle");
    e.that(block::bch_lower_bound(code.zset) == 7, "q=23 BCH run should have length 6");
  }
  return e.outcome("[26,21] passes w=5 (65780 subsets) and fails w=6; [53,47] passes w=5 "
                   "(2869685 subsets), BCH bound 7");
}

Outcome dual_distance() {
  Expect e;
  auto tower = quantum::tower_for(5);
  const auto ctx = cosets::CosetContext::family_one(5);
  for (u64 delta : {1u, 2u}) {
    const auto code = block::build_code(tower, cosets::defining_set_family_I(ctx, delta));
    const auto res = block::dual_distance_exhaustive(code, 100'000'000);
    const u64 expected = delta == 1 ? 24 : 22;
    e.that(res.distance == expected && expected == code.length() - code.codimension() + 1,
           "delta=" + std::to_string(delta) + " distance " + std::to_string(res.distance));
  }
  return e.outcome("Hermitian dual distances 24 and 22 equal n - |Z| + 1");
}

struct PipelineCase {
  Family family;
  u64 q, i;
  std::shared_ptr<const gf::FieldTower> tower;
  block::ConstacyclicCode c, c0, c1;
};

std::vector<PipelineCase> build_cases() {
  std::vector<PipelineCase> out;
  std::map<u64, std::shared_ptr<const gf::FieldTower>> towers;
  for (auto [f, q, i] : all_cases()) {
    if (!towers.count(q)) towers[q] = quantum::tower_for(q);
    const auto ctx = f == Family::I ? cosets::CosetContext::family_one(q)
                                    : cosets::CosetContext::family_two(q);
    auto span = [&](u64 a, u64 b) {
      return f == Family::I ? cosets::family_one_cosets(ctx, a, b)
                            : cosets::family_two_cosets(ctx, a, b);
    };
    auto& tower = towers[q];
    out.push_back({f, q, i, tower, block::build_code(tower, span(0, i)),
                   block::build_code(tower, span(0, i - 1)), block::build_code(tower, span(i, i))});
  }
  return out;
}

const std::vector<PipelineCase>& cases() {
  static const std::vector<PipelineCase> all = build_cases();
  return all;
}

std::string label(const PipelineCase& c) {
  return cosets::to_string(c.family) + " q=" + std::to_string(c.q) + " i=" + std::to_string(c.i);
}

Outcome oracle_agreement() {
  Expect e;
  for (const auto& c : cases()) {
    const bool crit = cosets::is_dual_containing(c.c.zset);
    const bool words = block::verify_dual_containing_codewords(c.c);
    e.that(crit == words && crit, label(c));
  }
  return e.outcome(std::to_string(cases().size()) +
                   " cases, coset criterion and codeword membership both true");
}

Outcome conv_checks() {
  Expect e;
  for (const auto& c : cases()) {
    const auto& f = c.tower->quad();
    const auto g = conv::split_and_build(f, c.c0.check_expanded, c.c1.check_expanded);
    e.that(conv::is_basic(f, g), label(c) + " basic");
    e.that(conv::is_reduced(f, g), label(c) + " reduced");
    e.that(conv::hermitian_self_orthogonal(f, g), label(c) + " self-orthogonal");
    e.that(g.memory == 1 && g.degree == 2, label(c) + " memory/degree");
    const auto d = block::distance_interval(c.c);
    const auto d0 = block::distance_interval(c.c0);
    const auto d1 = block::minimum_distance_codim_two(f, c.c1.check_expanded);
    const auto s = conv::free_distance_sandwich(d0.lower, d1, d.upper,
                                                c.c.length() - c.c.codimension() + 1);
    const u64 want = c.family == Family::I ? 2 * c.i + 2 : 2 * c.i + 3;
    e.that(d.exact() && s.pinned() && s.upper_perp == want, label(c) + " sandwich");
  }
  return e.outcome(std::to_string(cases().size()) +
                   " generators basic, reduced, self-orthogonal, mu=1, gamma=2, d_f pinned");
}

Outcome singleton_equality() {
  Expect e;
  for (const auto& c : cases()) {
    const auto [f, q, i] = std::tuple(c.family, c.q, c.i);
    const auto cert = quantum::construct(f, q, i, 0, {}, c.tower);
    const auto& p = cert.params;
    e.that(quantum::quantum_singleton_bound(p.n, p.k, 2) == p.d_f, "closed form");
    // (n-k)/2 * (0 + 1) + gamma + 1
    const u64 by_hand = (f == Family::I ? 2 * i - 1 : 2 * i) + 3;
    e.that(p.d_f == by_hand, "d_f by hand");
  }
  for (u64 i = 2; i <= 5; ++i) {
    const auto p = quantum::closed_form_params(Family::II, 37, i);
    e.that(quantum::is_mds(p), "q=37");
  }
  return e.outcome("quantum Singleton bound equals d_f for every certificate");
}

Outcome property_suites() {
  Expect e;
  std::size_t suites = 0;
  for (u64 q : {5u, 7u, 9u, 23u, 25u, 27u}) {
    const auto tower = quantum::tower_for(q);
    std::vector<quantum::CheckRecord> recs = invariants::field_axioms(*tower);
    for (auto& r : invariants::frobenius_automorphism(*tower)) recs.push_back(r);
    recs.push_back(invariants::expansion_roundtrip(*tower));
    recs.push_back(invariants::coset_partition(cosets::CosetContext::family_one(q)));
    if ((q % 10 == 3 || q % 10 == 7) && q > 10)
      recs.push_back(invariants::coset_partition(cosets::CosetContext::family_two(q)));
    for (const auto& r : recs) {
      ++suites;
      e.that(r.status == quantum::CheckStatus::Pass &&
                 r.detail.rfind(std::to_string(invariants::kDefaultSamples) + " samples", 0) == 0,
             "q=" + std::to_string(q) + " " + r.name + ": " + r.detail);
    }
  }
  return e.outcome(std::to_string(suites) + " suites of 1000 seeded samples");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "family I table", 60, table_one},
      {2, "family II table", 60, table_two},
      {3, "block MDS certification", 600, block_mds},
      {4, "dual-distance oracle", 300, dual_distance},
      {5, "dual-containment oracle agreement", 120, oracle_agreement},
      {6, "convolutional checks", 120, conv_checks},
      {7, "quantum Singleton equality", 1, singleton_equality},
      {8, "property suites", 30, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& err) {
      out = {false, std::string("exception: ") + err.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && secs > c.limit_s) {
      out.ok = false;
      out.detail += "; exceeded " + std::to_string(c.limit_s) + " s";
    }
    failures += !out.ok;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name
              << "): " << out.detail << " [" << time.str() << " s]" << std::endl;
  }
  return failures ? 1 : 0;
}
