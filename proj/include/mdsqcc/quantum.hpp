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
 * Quantum convolutional stabilizer parameters and the certified constructions
 * of the two code families.
 *
 * Family I:  n = q^2 + 1,        [(n, n - 4i + 2, 1; 2, 2i + 2)]_q, q >= 5,
 *            2 <= i <= (q - 1)/2.
 * Family II: n = (q^2 + 1)/10,   [(n, n - 4i, 1; 2, 2i + 3)]_q,
 *            q = 10m + 3 or 10m + 7 with m >= 2, 2 <= i <= 2m - 1.
 *
 * Both start from the constacyclic code C whose defining set is the first
 * i + 1 cosets of the family progression, split its parity-check matrix into
 * the first i cosets (N0) and the last one (N1), and take G(D) = N0 + N1 D.
 */

#ifndef MDSQCC_QUANTUM_HPP
#define MDSQCC_QUANTUM_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "block.hpp"
#include "conv.hpp"
#include "cosets.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "numtheory.hpp"
#include "json.hpp"

namespace mdsqcc::quantum {

using cosets::Family;
using nt::u64;

/// [(n, k, mu; gamma, d_f)]_q
struct QccParams {
  u64 q = 0;
  u64 n = 0;
  u64 k = 0;
  u64 mu = 0;
  u64 gamma = 0;
  u64 d_f = 0;
  friend bool operator==(const QccParams&, const QccParams&) = default;
};

/// floor of (n-k)/2 * (floor(2 gamma / (n+k)) + 1) + gamma + 1.
inline u64 quantum_singleton_bound(u64 n, u64 k, u64 gamma) {
  if (n <= k) throw PreconditionError("quantum_singleton_bound requires n > k");
  const u64 factor = (2 * gamma) / (n + k) + 1;
  return ((n - k) * factor) / 2 + gamma + 1;
}

inline bool is_mds(const QccParams& p) {
  return p.d_f == quantum_singleton_bound(p.n, p.k, p.gamma);
}

/// Stabilizer parameters from a Hermitian self-orthogonal classical code V of
/// dimension (n - k)/2. d_f = wt(V^perp \ V) equals the pinned free distance
/// of V^perp only when every nonzero word of V is heavier than that.
inline QccParams stabilizer_params(u64 q, const conv::ConvCode& classical, u64 d_f_pinned) {
  if (classical.bounds.lower_v <= d_f_pinned) {
    throw PreconditionError("weight separation fails: wt(V) >= " +
                            std::to_string(classical.bounds.lower_v) +
                            " does not exceed d_f = " + std::to_string(d_f_pinned));
  }
  if (2 * classical.dimension > classical.length) {
    throw PreconditionError("classical dimension exceeds n/2");
  }
  return {q,
          classical.length,
          classical.length - 2 * classical.dimension,
          static_cast<u64>(classical.memory),
          static_cast<u64>(classical.degree),
          d_f_pinned};
}

/// Closed-form parameters of the family for (q, i).
inline QccParams closed_form_params(Family family, u64 q, u64 i) {
  if (family == Family::I) {
    const u64 n = q * q + 1;
    return {q, n, n - 4 * i + 2, 1, 2, 2 * i + 2};
  }
  const u64 n = (q * q + 1) / 10;
  return {q, n, n - 4 * i, 1, 2, 2 * i + 3};
}

/// Throws PreconditionError naming the violated hypothesis.
inline void check_hypotheses(Family family, u64 q, u64 i) {
  if (!nt::is_odd_prime_power(q)) {
    throw PreconditionError("q = " + std::to_string(q) + " is not an odd prime power");
  }
  if (family == Family::I) {
    if (q < 5) throw PreconditionError("family I requires q ≥ 5, got q = " + std::to_string(q));
    if (i < 2 || i > (q - 1) / 2) {
      throw PreconditionError("family I requires 2 ≤ i ≤ (q-1)/2 = " +
                              std::to_string((q - 1) / 2) + ", got i = " + std::to_string(i));
    }
    return;
  }
  if (q % 10 != 3 && q % 10 != 7) {
    throw PreconditionError("family II requires q = 10m+3 or q = 10m+7, got q = " +
                            std::to_string(q));
  }
  const u64 m = q / 10;
  if (m < 2) {
    throw PreconditionError("family II requires m ≥ 2 (q = 10m+3 or 10m+7); q = " +
                            std::to_string(q) + " gives m = " + std::to_string(m) +
                            " and the range 2 ≤ i ≤ 2m-1 is empty");
  }
  if (i < 2 || i > 2 * m - 1) {
    throw PreconditionError("family II requires 2 ≤ i ≤ 2m-1 = " + std::to_string(2 * m - 1) +
                            ", got i = " + std::to_string(i));
  }
}

/// Largest i of the family for q (0 when q is outside the family).
inline u64 max_index(Family family, u64 q) {
  if (family == Family::I) return q >= 5 ? (q - 1) / 2 : 0;
  if (q % 10 != 3 && q % 10 != 7) return 0;
  return q / 10 >= 2 ? 2 * (q / 10) - 1 : 0;
}

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
  /// Verification level the check belongs to.
  int level = 1;
};

struct Budget {
  u64 rank_checks = 100'000'000;
  u64 words = 100'000'000;
};

struct QccCertificate {
  Family family = Family::I;
  u64 q = 0;
  u64 i = 0;
  int level = 1;
  QccParams params;
  u64 singleton_bound = 0;
  bool mds = false;
  std::vector<CheckRecord> checks;
  u64 p = 0;
  u64 e = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> irreducibles;
  std::vector<std::pair<std::string, std::vector<u64>>> defining_sets;
  std::vector<std::string> erratum_notes;
  std::vector<std::pair<std::string, double>> timings_ms;
  bool budget_exhausted = false;

  const CheckRecord* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool has_failure() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckRecord& c) { return c.status == CheckStatus::Fail; });
  }
  /// Every check at or below the requested level ran and passed.
  bool valid() const {
    return !budget_exhausted &&
           std::all_of(checks.begin(), checks.end(), [&](const CheckRecord& c) {
             return c.level > level ? c.status != CheckStatus::Fail
                                    : c.status == CheckStatus::Pass;
           });
  }
};

inline std::shared_ptr<const gf::FieldTower> tower_for(u64 q) {
  const auto pp = nt::as_prime_power(q);
  if (!pp) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
  return std::make_shared<const gf::FieldTower>(pp->p, pp->e);
}

namespace detail {

class Recorder {
 public:
  explicit Recorder(QccCertificate& cert) : cert_(cert) {}

  void record(std::string name, bool ok, std::string detail, int level = 1) {
    cert_.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail,
                            std::move(detail), level});
  }
  void skip(std::string name, std::string detail, int level) {
    cert_.checks.push_back({std::move(name), CheckStatus::Skipped, std::move(detail), level});
  }
  template <class Fn>
  auto timed(const std::string& label, Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(fn())>) {
      fn();
      stop(label, t0);
    } else {
      auto result = fn();
      stop(label, t0);
      return result;
    }
  }

 private:
  void stop(const std::string& label, std::chrono::steady_clock::time_point t0) {
    const auto dt = std::chrono::steady_clock::now() - t0;
    cert_.timings_ms.emplace_back(
        label, std::chrono::duration<double, std::milli>(dt).count());
  }
  QccCertificate& cert_;
};

inline std::string code_label(const block::ConstacyclicCode& c) {
  return "[" + std::to_string(c.length()) + ", " + std::to_string(c.dimension()) + "]";
}

inline const char* const kLevelOneChecks[] = {
    "coset_decomposition",   "dual_containing_coset_criterion",
    "generator_polynomial",  "dual_containing_codeword_membership",
    "parity_check_rank",     "bch_bound",
    "c1_distance",           "generator_shape",
    "basic",                 "reduced",
    "hermitian_self_orthogonal", "dual_distance_mds",
    "free_distance_sandwich", "weight_separation"};

inline const char* const kLevelTwoChecks[] = {"column_distance_oracle", "column_distance_oracle_c0",
                                              "dual_distance_exhaustive"};

}  // namespace detail

/// Runs the construction pipeline for (family, q, i) at verification level
/// 0 (closed forms only), 1 (all algebraic checks) or 2 (plus the exhaustive
/// distance oracles within budget). Throws PreconditionError on inputs
/// outside the family's hypotheses.
inline QccCertificate construct(Family family, u64 q, u64 i, int level, Budget budget = {},
                                std::shared_ptr<const gf::FieldTower> tower = nullptr) {
  if (level < 0 || level > 2) throw PreconditionError("level must be 0, 1 or 2");
  check_hypotheses(family, q, i);

  QccCertificate cert;
  cert.family = family;
  cert.q = q;
  cert.i = i;
  cert.level = level;
  detail::Recorder rec(cert);
  const QccParams expected = closed_form_params(family, q, i);

  if (family == Family::II) {
    cert.erratum_notes.push_back(
        "free distance of the classical code V is bounded below by n-2i-1 (the MDS distance "
        "of the Hermitian dual of C, |Z| = 2i+2); the bound n-2i+1 sometimes stated for this "
        "family does not follow and is not used");
    if (q == 37) {
      cert.erratum_notes.push_back(
          "the m=3 row of the reference table for this family, [(137, 137-4i, 1; 2, 2i+3)] "
          "with 2 <= i <= 5, is printed with q=13; q=13 gives n=17 and m=1, while q=37 = "
          "10*3+7 gives n=137, so the row is reproduced here with q=37");
    }
  }

  if (!tower) tower = rec.timed("tower", [&] { return tower_for(q); });
  cert.p = tower->p();
  cert.e = tower->e();
  cert.irreducibles = tower->defining_polynomials();

  if (level == 0) {
    cert.params = expected;
    for (const char* name : detail::kLevelOneChecks) rec.skip(name, "level 0", 1);
    for (const char* name : detail::kLevelTwoChecks) rec.skip(name, "level 0", 2);
    rec.record("params_closed_form", true, "closed-form parameters", 0);
    cert.singleton_bound = quantum_singleton_bound(cert.params.n, cert.params.k, cert.params.gamma);
    cert.mds = is_mds(cert.params);
    rec.record("quantum_singleton", cert.mds,
               "bound " + std::to_string(cert.singleton_bound) + " vs d_f " +
                   std::to_string(cert.params.d_f), 0);
    return cert;
  }

  // Cosets and defining sets.
  const auto ctx = family == Family::I ? cosets::CosetContext::family_one(q)
                                       : cosets::CosetContext::family_two(q);
  {
    const auto part = rec.timed("cosets", [&] { return cosets::theta_decomposition(ctx); });
    const std::size_t singles = part.singletons().size();
    const std::size_t pairs = part.pairs().size();
    const std::size_t want_singles = family == Family::I ? 2 : 1;
    rec.record("coset_decomposition", singles == want_singles && singles + 2 * pairs == ctx.n,
               std::to_string(singles) + " singletons + " + std::to_string(pairs) + " pairs = " +
                   std::to_string(singles + 2 * pairs) + " exponents");
  }
  auto family_cosets = [&](u64 first, u64 last) {
    return family == Family::I ? cosets::family_one_cosets(ctx, first, last)
                               : cosets::family_two_cosets(ctx, first, last);
  };
  const auto z = family_cosets(0, i);
  const auto z0 = family_cosets(0, i - 1);
  const auto z1 = family_cosets(i, i);
  cert.defining_sets = {{"C", z.exponents}, {"C0", z0.exponents}, {"C1", z1.exponents}};

  const bool criterion = cosets::is_dual_containing(z);
  rec.record("dual_containing_coset_criterion", criterion,
             "Z and -qZ mod rn are " + std::string(criterion ? "disjoint" : "not disjoint"));

  // Block codes.
  std::optional<block::ConstacyclicCode> c, c0, c1;
  try {
    rec.timed("block_codes", [&] {
      c = block::build_code(tower, z);
      c0 = block::build_code(tower, z0);
      c1 = block::build_code(tower, z1);
    });
  } catch (const ConsistencyError& err) {
    rec.record("generator_polynomial", false, err.what());
    return cert;
  }
  rec.record("generator_polynomial", true,
             "deg g = |Z| = " + std::to_string(c->genpoly.degree()) +
                 ", g divides X^n - lambda, coefficients in F_{q^2}; C = " +
                 detail::code_label(*c) + ", C0 = " + detail::code_label(*c0) +
                 ", C1 = " + detail::code_label(*c1));

  const bool membership =
      rec.timed("dual_membership", [&] { return block::verify_dual_containing_codewords(*c); });
  rec.record("dual_containing_codeword_membership", membership && membership == criterion,
             std::string("conjugated parity-check rows ") +
                 (membership ? "are" : "are not") + " multiples of g; coset criterion " +
                 (membership == criterion ? "agrees" : "disagrees"));

  const bool split_consistent = c->check_expanded == stack(c0->check_expanded, c1->check_expanded);
  rec.record("parity_check_rank",
             split_consistent && c->check_expanded.rows() == z.size() &&
                 c0->check_expanded.rows() == z0.size() && c1->check_expanded.rows() == z1.size(),
             "ranks " + std::to_string(c->check_expanded.rows()) + " = " +
                 std::to_string(c0->check_expanded.rows()) + " + " +
                 std::to_string(c1->check_expanded.rows()) + "; N_C = [N_C0; N_C1] " +
                 (split_consistent ? "holds" : "fails"));

  const auto dist = block::distance_interval(*c);
  const auto dist0 = block::distance_interval(*c0);
  rec.record("bch_bound", dist.exact() && dist0.exact(),
             "C: BCH " + std::to_string(dist.lower) + ", Singleton " + std::to_string(dist.upper) +
                 "; C0: BCH " + std::to_string(dist0.lower) + ", Singleton " +
                 std::to_string(dist0.upper));

  const auto& f2 = tower->quad();
  const std::size_t d1 = block::minimum_distance_codim_two(f2, c1->check_expanded);
  rec.record("c1_distance", d1 >= 2, "d(C1) = " + std::to_string(d1) + " (exact)");

  // Convolutional code.
  const auto g = rec.timed("split", [&] {
    return conv::split_and_build(f2, c0->check_expanded, c1->check_expanded);
  });
  const u64 classical_dim = (expected.n - expected.k) / 2;
  rec.record("generator_shape",
             g.rows == classical_dim && g.memory == 1 && g.degree == 2 && g.degrees_consistent(),
             std::to_string(g.rows) + "x" + std::to_string(g.cols) + " generator, memory " +
                 std::to_string(g.memory) + ", degree " + std::to_string(g.degree));
  const auto gcd = rec.timed("basic", [&] { return conv::maximal_minor_gcd(f2, g); });
  rec.record("basic", gcd.degree() == 0,
             "gcd of maximal minors has degree " + std::to_string(gcd.degree()));
  rec.record("reduced", rec.timed("reduced", [&] { return conv::is_reduced(f2, g); }),
             "leading-coefficient matrix rank vs " + std::to_string(g.rows) + " rows");
  rec.record("hermitian_self_orthogonal",
             rec.timed("self_orthogonal", [&] { return conv::hermitian_self_orthogonal(f2, g); }),
             "all Hermitian Laurent row products vanish");

  // The Hermitian dual of an MDS code is MDS.
  const std::size_t d_dual = c->length() - c->codimension() + 1;
  rec.record("dual_distance_mds", dist.exact(),
             "d(C^perp_h) = n - |Z| + 1 = " + std::to_string(d_dual));

  const auto sandwich = conv::free_distance_sandwich(dist0.lower, d1, dist.upper, d_dual);
  rec.record("free_distance_sandwich", sandwich.pinned() && sandwich.upper_perp == expected.d_f,
             "min(" + std::to_string(dist0.lower) + " + " + std::to_string(d1) + ", " +
                 std::to_string(dist.upper) + ") = " + std::to_string(sandwich.lower_perp) +
                 " <= d_f(V^perp_h) <= " + std::to_string(sandwich.upper_perp));

  const auto v = conv::make_conv_code(g, sandwich);
  rec.record("weight_separation", sandwich.lower_v > sandwich.upper_perp,
             "wt(V) >= " + std::to_string(sandwich.lower_v) + " > " +
                 std::to_string(sandwich.upper_perp) + " = wt(V^perp_h)");

  if (sandwich.pinned() && sandwich.lower_v > sandwich.upper_perp) {
    cert.params = stabilizer_params(q, v, sandwich.upper_perp);
  } else {
    cert.params = expected;
    cert.params.d_f = sandwich.lower_perp;
  }
  rec.record("params_closed_form", cert.params == expected,
             "[(" + std::to_string(cert.params.n) + ", " + std::to_string(cert.params.k) + ", " +
                 std::to_string(cert.params.mu) + "; " + std::to_string(cert.params.gamma) +
                 ", " + std::to_string(cert.params.d_f) + ")]_" + std::to_string(q), 0);
  cert.singleton_bound = quantum_singleton_bound(cert.params.n, cert.params.k, cert.params.gamma);
  cert.mds = is_mds(cert.params);
  rec.record("quantum_singleton", cert.mds,
             "bound " + std::to_string(cert.singleton_bound) + " vs d_f " +
                 std::to_string(cert.params.d_f), 0);

  if (level < 2) {
    for (const char* name : detail::kLevelTwoChecks) rec.skip(name, "level 1", 2);
    return cert;
  }

  // Exhaustive oracles: every w-subset of columns of the expanded parity
  // check is independent iff d >= w + 1; with w = |Z| this meets Singleton.
  auto column_check = [&](const char* name, const block::ConstacyclicCode& code) {
    const std::size_t w = code.codimension();
    try {
      const auto res = rec.timed(name, [&] {
        return block::certify_distance_columns(code, w, budget.rank_checks);
      });
      std::string msg = std::to_string(res.subsets) + " subsets of " + std::to_string(w) +
                           " columns ";
      if (res.passed) {
        msg += "independent: d = " + std::to_string(w + 1) + " on " + detail::code_label(code);
      } else {
        msg += "checked; dependent subset {";
        for (std::size_t t = 0; t < res.witness.size(); ++t)
          msg += (t ? ", " : "") + std::to_string(res.witness[t]);
        msg += "}";
      }
      rec.record(name, res.passed, msg, 2);
    } catch (const BudgetExceeded& err) {
      cert.budget_exhausted = true;
      rec.skip(name, err.what(), 2);
    }
  };
  column_check("column_distance_oracle", *c);
  column_check("column_distance_oracle_c0", *c0);

  try {
    const auto dd = rec.timed("dual_distance_exhaustive",
                              [&] { return block::dual_distance_exhaustive(*c, budget.words); });
    rec.record("dual_distance_exhaustive", dd.distance == d_dual,
               "minimum weight " + std::to_string(dd.distance) + " over " +
                   std::to_string(dd.words) + " projective words, expected " +
                   std::to_string(d_dual), 2);
  } catch (const BudgetExceeded& err) {
    cert.budget_exhausted = true;
    rec.skip("dual_distance_exhaustive", err.what(), 2);
  }
  return cert;
}

inline QccCertificate construct_family_I(u64 q, u64 i, int level, Budget budget = {},
                                         std::shared_ptr<const gf::FieldTower> tower = nullptr) {
  return construct(Family::I, q, i, level, budget, std::move(tower));
}

inline QccCertificate construct_family_II(u64 q, u64 i, int level, Budget budget = {},
                                          std::shared_ptr<const gf::FieldTower> tower = nullptr) {
  return construct(Family::II, q, i, level, budget, std::move(tower));
}

/// Certificate as JSON. Field order is fixed; only timings_ms varies run to run.
inline nlohmann::ordered_json to_json(const QccCertificate& cert) {
  nlohmann::ordered_json j;
  j["family"] = cosets::to_string(cert.family);
  j["q"] = cert.q;
  j["i"] = cert.i;
  j["level"] = cert.level;
  j["valid"] = cert.valid();
  j["params"] = {{"n", cert.params.n},         {"k", cert.params.k},
                 {"mu", cert.params.mu},       {"gamma", cert.params.gamma},
                 {"d_f", cert.params.d_f}};
  j["singleton_bound"] = cert.singleton_bound;
  j["mds"] = cert.mds;
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& c : cert.checks)
    checks[c.name] = {{"status", to_string(c.status)}, {"detail", c.detail}};
  j["checks"] = checks;
  j["tower"] = {{"p", cert.p}, {"e", cert.e}, {"irreducibles", cert.irreducibles}};
  nlohmann::ordered_json sets = nlohmann::ordered_json::object();
  for (const auto& [name, exps] : cert.defining_sets) sets[name] = exps;
  j["defining_sets"] = sets;
  j["erratum_notes"] = cert.erratum_notes;
  j["budget_exhausted"] = cert.budget_exhausted;
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  for (const auto& [name, ms] : cert.timings_ms) timings[name] = ms;
  j["timings_ms"] = timings;
  return j;
}

}  // namespace mdsqcc::quantum

#endif  // MDSQCC_QUANTUM_HPP
