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

/*
 * Command layer behind the CLI. Commands return their exit code together
 * with the stdout and stderr text, so tests can drive them without a
 * process boundary.
 *
 * Exit codes: 0 valid, 1 failed check, 2 precondition violation, 3 budget
 * exhausted.
 */

#ifndef MDSQCC_COMMANDS_HPP
#define MDSQCC_COMMANDS_HPP

#include <algorithm>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cosets.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "invariants.hpp"
#include "json.hpp"
#include "quantum.hpp"

namespace mdsqcc::commands {

using cosets::Family;
using nt::u64;

enum ExitCode : int { kValid = 0, kCheckFailed = 1, kPrecondition = 2, kBudget = 3 };

struct RunConfig {
  std::string command;
  std::optional<Family> family;
  std::vector<u64> qs;
  std::optional<u64> i;
  std::optional<std::pair<u64, u64>> i_range;
  int level = 1;
  quantum::Budget budget;
  std::string out;
  /// json, csv or text; empty picks the command's default.
  std::string format;
};

struct CommandResult {
  int exit_code = kValid;
  std::string output;
  std::string diagnostics;
};

inline Family parse_family(const std::string& s) {
  if (s == "I" || s == "1") return Family::I;
  if (s == "II" || s == "2") return Family::II;
  throw PreconditionError("family must be I or II, got '" + s + "'");
}

inline void validate(const RunConfig& cfg) {
  if (cfg.level < 0 || cfg.level > 2) {
    throw PreconditionError("level must be 0, 1 or 2, got " + std::to_string(cfg.level));
  }
  if (cfg.budget.rank_checks == 0 || cfg.budget.words == 0) {
    throw PreconditionError("budgets must be positive");
  }
  if (cfg.i_range && cfg.i_range->first > cfg.i_range->second) {
    throw PreconditionError("empty i-range");
  }
  if (!cfg.format.empty() && cfg.format != "json" && cfg.format != "csv" && cfg.format != "text") {
    throw PreconditionError("format must be json, csv or text");
  }
}

/// In-range indices of the family for q, filtered by --i / --i-range.
inline std::vector<u64> indices_for(const RunConfig& cfg, Family family, u64 q) {
  std::vector<u64> out;
  for (u64 i = 2; i <= quantum::max_index(family, q); ++i) {
    if (cfg.i && *cfg.i != i) continue;
    if (cfg.i_range && (i < cfg.i_range->first || i > cfg.i_range->second)) continue;
    out.push_back(i);
  }
  return out;
}

namespace detail {

template <class Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const PreconditionError& err) {
    return {kPrecondition, "", std::string("error: ") + err.what() + "\n"};
  } catch (const BudgetExceeded& err) {
    return {kBudget, "", std::string("error: ") + err.what() + "\n"};
  } catch (const ConsistencyError& err) {
    return {kCheckFailed, "", std::string("error: internal check failed: ") + err.what() + "\n"};
  }
}

inline int certificate_exit(const quantum::QccCertificate& cert) {
  if (cert.has_failure()) return kCheckFailed;
  if (cert.budget_exhausted) return kBudget;
  return cert.valid() ? kValid : kCheckFailed;
}

inline std::string status_word(quantum::CheckStatus s) {
  return s == quantum::CheckStatus::Skipped ? "SKIP" : quantum::to_string(s);
}

inline std::string params_label(const quantum::QccParams& p) {
  return "[(" + std::to_string(p.n) + ", " + std::to_string(p.k) + ", " + std::to_string(p.mu) +
         "; " + std::to_string(p.gamma) + ", " + std::to_string(p.d_f) + ")]_" +
         std::to_string(p.q);
}

inline std::string certificate_text(const quantum::QccCertificate& cert) {
  std::ostringstream os;
  os << "family " << cosets::to_string(cert.family) << ", q = " << cert.q << ", i = " << cert.i
     << ", level " << cert.level << "\n";
  os << params_label(cert.params) << "  singleton " << cert.singleton_bound
     << (cert.mds ? "  MDS" : "") << (cert.valid() ? "  VALID" : "  INVALID") << "\n";
  for (const auto& c : cert.checks) {
    os << status_word(c.status) << "  " << c.name << ": " << c.detail << "\n";
  }
  for (const auto& note : cert.erratum_notes) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace detail

inline CommandResult cmd_construct(const RunConfig& cfg) {
  return detail::guarded([&]() -> CommandResult {
    validate(cfg);
    if (!cfg.family) throw PreconditionError("construct needs --family");
    if (cfg.qs.size() != 1) throw PreconditionError("construct needs exactly one --q");
    if (!cfg.i) throw PreconditionError("construct needs --i");
    const auto cert = quantum::construct(*cfg.family, cfg.qs.front(), *cfg.i, cfg.level, cfg.budget);
    CommandResult res;
    res.exit_code = detail::certificate_exit(cert);
    if (cfg.format == "text") {
      res.output = detail::certificate_text(cert);
    } else if (cfg.format.empty() || cfg.format == "json") {
      res.output = quantum::to_json(cert).dump(2) + "\n";
    } else {
      throw PreconditionError("construct supports json or text output");
    }
    if (cert.budget_exhausted) res.diagnostics += "error: work budget exhausted at level 2\n";
    return res;
  });
}

struct TableRow {
  u64 q = 0;
  u64 i = 0;
  std::optional<quantum::QccCertificate> cert;
  std::string warning;
};

/// Rows for every (q, i) in range, computed concurrently and sorted by (q, i).
inline std::vector<TableRow> table_rows(const RunConfig& cfg) {
  const Family family = *cfg.family;
  std::vector<u64> qs = cfg.qs;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

  std::vector<TableRow> rows;
  std::vector<std::future<TableRow>> jobs;
  for (u64 q : qs) {
    try {
      quantum::check_hypotheses(family, q, 2);
    } catch (const PreconditionError& err) {
      rows.push_back({q, 0, std::nullopt, err.what()});
      continue;
    }
    auto tower = std::make_shared<std::shared_future<std::shared_ptr<const gf::FieldTower>>>(
        std::async(std::launch::async, [q] { return quantum::tower_for(q); }).share());
    for (u64 i : indices_for(cfg, family, q)) {
      jobs.push_back(std::async(std::launch::async, [=, &cfg]() {
        return TableRow{q, i,
                        quantum::construct(family, q, i, cfg.level, cfg.budget, tower->get()), ""};
      }));
    }
  }
  for (auto& job : jobs) rows.push_back(job.get());
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return std::pair(a.q, a.i) < std::pair(b.q, b.i);
  });
  return rows;
}

inline const char* const kTableColumns[] = {"q", "i", "n", "k", "mu", "gamma",
                                            "d_f", "singleton", "mds", "valid"};

inline CommandResult cmd_table(const RunConfig& cfg) {
  return detail::guarded([&]() -> CommandResult {
    validate(cfg);
    if (!cfg.family) throw PreconditionError("table needs --family");
    const auto rows = table_rows(cfg);

    CommandResult res;
    std::map<u64, std::vector<std::string>> notes;
    for (const auto& row : rows) {
      if (!row.warning.empty()) {
        res.diagnostics += "warning: q = " + std::to_string(row.q) + " skipped: " + row.warning + "\n";
        continue;
      }
      if (!notes.count(row.q)) notes[row.q] = row.cert->erratum_notes;
      const int code = detail::certificate_exit(*row.cert);
      if (code == kCheckFailed || (code == kBudget && res.exit_code == kValid)) res.exit_code = code;
    }
    for (const auto& [q, list] : notes)
      for (const auto& note : list) res.diagnostics += "note: q = " + std::to_string(q) + ": " + note + "\n";

    const std::string format = cfg.format.empty() ? "csv" : cfg.format;
    std::ostringstream os;
    if (format == "json") {
      nlohmann::ordered_json j;
      j["family"] = cosets::to_string(*cfg.family);
      j["level"] = cfg.level;
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        nlohmann::ordered_json r;
        r["q"] = row.q;
        if (row.cert) {
          const auto& p = row.cert->params;
          r["i"] = row.i;
          r["n"] = p.n;
          r["k"] = p.k;
          r["mu"] = p.mu;
          r["gamma"] = p.gamma;
          r["d_f"] = p.d_f;
          r["singleton"] = row.cert->singleton_bound;
          r["mds"] = row.cert->mds;
          r["valid"] = row.cert->valid();
        } else {
          r["valid"] = false;
          r["warning"] = row.warning;
        }
        j["rows"].push_back(r);
      }
      nlohmann::ordered_json n = nlohmann::ordered_json::object();
      for (const auto& [q, list] : notes)
        if (!list.empty()) n[std::to_string(q)] = list;
      j["erratum_notes"] = n;
      os << j.dump(2) << "\n";
    } else {
      const char* sep = format == "csv" ? "," : "\t";
      for (std::size_t c = 0; c < std::size(kTableColumns); ++c) os << (c ? sep : "") << kTableColumns[c];
      os << "\n";
      for (const auto& row : rows) {
        if (!row.cert) {
          os << row.q;
          for (std::size_t c = 1; c + 1 < std::size(kTableColumns); ++c) os << sep;
          os << sep << "false\n";
          continue;
        }
        const auto& p = row.cert->params;
        os << row.q << sep << row.i << sep << p.n << sep << p.k << sep << p.mu << sep << p.gamma
           << sep << p.d_f << sep << row.cert->singleton_bound << sep
           << (row.cert->mds ? "true" : "false") << sep << (row.cert->valid() ? "true" : "false")
           << "\n";
      }
    }
    res.output = os.str();
    return res;
  });
}

inline nlohmann::ordered_json cosets_json(Family family, u64 q) {
  const auto ctx = family == Family::I ? cosets::CosetContext::family_one(q)
                                       : cosets::CosetContext::family_two(q);
  const auto part = cosets::theta_decomposition(ctx);
  nlohmann::ordered_json j;
  j["family"] = cosets::to_string(family);
  j["q"] = q;
  j["n"] = ctx.n;
  j["r"] = ctx.r;
  j["modulus"] = ctx.modulus;
  if (ctx.s) j["s"] = *ctx.s;
  j["singletons"] = nlohmann::ordered_json::array();
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& c : part.cosets) (c.members.size() == 1 ? j["singletons"] : j["pairs"]).push_back(c.members);
  const auto singles = part.singletons().size();
  const auto pairs = part.pairs().size();
  j["counts"] = {{"singletons", singles}, {"pairs", pairs}, {"exponents", singles + 2 * pairs}};
  return j;
}

inline CommandResult cmd_cosets(const RunConfig& cfg) {
  return detail::guarded([&]() -> CommandResult {
    validate(cfg);
    if (!cfg.family) throw PreconditionError("cosets needs --family");
    if (cfg.qs.size() != 1) throw PreconditionError("cosets needs exactly one --q");
    const auto j = cosets_json(*cfg.family, cfg.qs.front());
    CommandResult res;
    if (cfg.format == "text") {
      std::ostringstream os;
      os << "family " << j["family"].get<std::string>() << ", q = " << j["q"] << ", n = " << j["n"]
         << ", modulus " << j["modulus"] << "\n";
      os << "singletons: " << j["singletons"].dump() << "\n";
      os << "pairs: " << j["pairs"].dump() << "\n";
      os << j["counts"]["singletons"] << " singletons + " << j["counts"]["pairs"] << " pairs = "
         << j["counts"]["exponents"] << " exponents\n";
      res.output = os.str();
    } else {
      res.output = j.dump(2) + "\n";
    }
    return res;
  });
}

struct VerifyLine {
  std::string suite;
  std::string check;
  quantum::CheckStatus status;
  std::string detail;
};

/// Default upper end of the coset-criterion sweep in verify.
inline constexpr u64 kDualContainmentMaxQ = 47;

inline const std::vector<u64>& default_verify_qs(Family family) {
  static const std::vector<u64> one{5, 7, 9, 11, 13, 17, 19, 23, 25, 27};
  static const std::vector<u64> two{23, 27};
  return family == Family::I ? one : two;
}

/// Runs the invariant suites and the pipeline. With no --q the defaults are the
/// odd prime powers 5..27 for family I and {23, 27} for family II.
inline std::vector<VerifyLine> verify_lines(const RunConfig& cfg) {
  std::vector<Family> families;
  if (cfg.family) families = {*cfg.family};
  else families = {Family::I, Family::II};

  std::vector<std::pair<Family, u64>> cases;
  std::vector<u64> field_qs;
  for (Family f : families) {
    const auto& qs = cfg.qs.empty() ? default_verify_qs(f) : cfg.qs;
    for (u64 q : qs) {
      if (!nt::is_odd_prime_power(q)) continue;
      field_qs.push_back(q);
      if (quantum::max_index(f, q) >= 2) cases.emplace_back(f, q);
    }
  }
  std::sort(field_qs.begin(), field_qs.end());
  field_qs.erase(std::unique(field_qs.begin(), field_qs.end()), field_qs.end());

  std::vector<VerifyLine> lines;
  for (u64 q : cfg.qs)
    if (!nt::is_odd_prime_power(q))
      lines.push_back({"input", "q=" + std::to_string(q), quantum::CheckStatus::Skipped,
                       "not an odd prime power"});

  std::map<u64, std::shared_future<std::shared_ptr<const gf::FieldTower>>> towers;
  for (u64 q : field_qs)
    towers[q] = std::async(std::launch::async, [q] { return quantum::tower_for(q); }).share();

  for (u64 q : field_qs) {
    const auto tower = towers[q].get();
    std::vector<quantum::CheckRecord> recs = invariants::field_axioms(*tower);
    for (auto& r : invariants::frobenius_automorphism(*tower)) recs.push_back(r);
    recs.push_back(invariants::expansion_roundtrip(*tower));
    for (const auto& r : recs)
      lines.push_back({"field q=" + std::to_string(q), r.name, r.status, r.detail});
  }

  // Coset criterion for every in-range index, over a wider q range than the
  // full pipeline since it is integer arithmetic only.
  for (Family f : families) {
    std::vector<u64> qs = cfg.qs;
    if (qs.empty())
      for (u64 q = 5; q <= kDualContainmentMaxQ; q += 2)
        if (nt::is_odd_prime_power(q)) qs.push_back(q);
    for (u64 q : qs) {
      if (!nt::is_odd_prime_power(q) || quantum::max_index(f, q) < 2) continue;
      const auto ctx = f == Family::I ? cosets::CosetContext::family_one(q)
                                      : cosets::CosetContext::family_two(q);
      const auto idx = indices_for(cfg, f, q);
      std::size_t bad = 0;
      for (u64 i : idx) {
        const auto z = f == Family::I ? cosets::family_one_cosets(ctx, 0, i)
                                      : cosets::family_two_cosets(ctx, 0, i);
        bad += !cosets::is_dual_containing(z);
      }
      lines.push_back({"dual containment family " + cosets::to_string(f) + " q=" + std::to_string(q),
                       "coset_criterion", bad ? quantum::CheckStatus::Fail : quantum::CheckStatus::Pass,
                       std::to_string(idx.size() - bad) + " of " + std::to_string(idx.size()) +
                           " defining sets dual-containing"});
    }
  }

  std::vector<std::future<std::vector<VerifyLine>>> jobs;
  for (const auto& [f, q] : cases) {
    const auto ctx = f == Family::I ? cosets::CosetContext::family_one(q)
                                    : cosets::CosetContext::family_two(q);
    const std::string suite = "family " + cosets::to_string(f) + " q=" + std::to_string(q);
    const auto r = invariants::coset_partition(ctx);
    lines.push_back({suite, r.name, r.status, r.detail});
    for (u64 i : indices_for(cfg, f, q)) {
      auto tower = towers[q];
      jobs.push_back(std::async(std::launch::async, [=, &cfg] {
        const auto cert = quantum::construct(f, q, i, cfg.level, cfg.budget, tower.get());
        std::vector<VerifyLine> out;
        const std::string name = suite + " i=" + std::to_string(i);
        for (const auto& c : cert.checks) {
          if (c.level > cfg.level) continue;
          out.push_back({name, c.name, c.status, c.detail});
        }
        return out;
      }));
    }
  }
  for (auto& job : jobs)
    for (auto& line : job.get()) lines.push_back(std::move(line));
  return lines;
}

inline CommandResult cmd_verify(const RunConfig& cfg) {
  return detail::guarded([&]() -> CommandResult {
    validate(cfg);
    const auto lines = verify_lines(cfg);
    CommandResult res;
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& l : lines) {
      if (l.status == quantum::CheckStatus::Pass) ++pass;
      else if (l.status == quantum::CheckStatus::Fail) ++fail;
      else ++skip;
    }
    if (cfg.format == "json") {
      nlohmann::ordered_json j;
      j["level"] = cfg.level;
      j["checks"] = nlohmann::ordered_json::array();
      for (const auto& l : lines)
        j["checks"].push_back({{"suite", l.suite}, {"check", l.check},
                               {"status", detail::status_word(l.status)}, {"detail", l.detail}});
      j["summary"] = {{"pass", pass}, {"fail", fail}, {"skip", skip}};
      res.output = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      for (const auto& l : lines)
        os << detail::status_word(l.status) << "  " << l.suite << "  " << l.check << ": " << l.detail << "\n";
      os << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
      res.output = os.str();
    }
    res.exit_code = fail ? kCheckFailed : kValid;
    return res;
  });
}

}  // namespace mdsqcc::commands

#endif  // MDSQCC_COMMANDS_HPP
