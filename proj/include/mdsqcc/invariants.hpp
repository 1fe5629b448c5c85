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
 * Randomised invariant suites over a field tower and a coset context. Each
 * suite draws its samples from a seeded std::mt19937_64, so reports are
 * reproducible.
 */

#ifndef MDSQCC_INVARIANTS_HPP
#define MDSQCC_INVARIANTS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cosets.hpp"
#include "gf.hpp"
#include "quantum.hpp"

namespace mdsqcc::invariants {

using quantum::CheckRecord;
using quantum::CheckStatus;

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr std::size_t kDefaultSamples = 1000;

namespace detail {

inline CheckRecord outcome(std::string name, std::size_t samples, std::size_t failures,
                           const std::string& first_failure) {
  CheckRecord r;
  r.name = std::move(name);
  r.level = 0;
  r.status = failures == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  r.detail = std::to_string(samples) + " samples";
  if (failures) r.detail += ", " + std::to_string(failures) + " failed (first: " + first_failure + ")";
  return r;
}

template <gf::FiniteField F>
CheckRecord field_axioms_at(const F& f, const std::string& label, std::size_t samples,
                            std::mt19937_64& rng) {
  std::size_t failures = 0;
  std::string first;
  auto fail = [&](const char* what) {
    if (failures++ == 0) first = what;
  };
  for (std::size_t t = 0; t < samples; ++t) {
    const auto a = gf::random_element(f, rng);
    const auto b = gf::random_element(f, rng);
    const auto c = gf::random_element(f, rng);
    if (f.add(a, b) != f.add(b, a)) fail("a+b = b+a");
    if (f.mul(a, b) != f.mul(b, a)) fail("ab = ba");
    if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) fail("(a+b)+c = a+(b+c)");
    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) fail("(ab)c = a(bc)");
    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) fail("a(b+c) = ab+ac");
    if (f.add(a, f.zero()) != a || f.mul(a, f.one()) != a) fail("identities");
    if (f.add(a, f.neg(a)) != f.zero()) fail("a + (-a) = 0");
    if (f.sub(f.add(a, b), b) != a) fail("(a+b)-b = a");
    if (a != f.zero() && f.mul(a, f.inv(a)) != f.one()) fail("a a^-1 = 1");
    if (a != f.zero() && f.pow(a, f.size() - 1) != f.one()) fail("a^(Q-1) = 1");
    if (f.from_index(f.index(a)) != a) fail("index round trip");
  }
  return outcome("field_axioms_" + label, samples, failures, first);
}

}  // namespace detail

/// Ring identities and inverses at every level.
inline std::vector<CheckRecord> field_axioms(const gf::FieldTower& tower,
                                             std::size_t samples = kDefaultSamples,
                                             std::uint64_t seed = kDefaultSeed) {
  std::mt19937_64 rng(seed);
  return {detail::field_axioms_at(tower.base(), "q", samples, rng),
          detail::field_axioms_at(tower.quad(), "q2", samples, rng),
          detail::field_axioms_at(tower.quart(), "q4", samples, rng)};
}

/// x -> x^q is additive, multiplicative, equals pow(x, q), fixes F_q inside
/// F_{q^2} (order 2) and F_{q^2} inside F_{q^4} after two applications.
inline std::vector<CheckRecord> frobenius_automorphism(const gf::FieldTower& tower,
                                                       std::size_t samples = kDefaultSamples,
                                                       std::uint64_t seed = kDefaultSeed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const auto& f2 = tower.quad();
  const auto& f4 = tower.quart();
  const auto q = tower.q();
  std::size_t fail2 = 0, fail4 = 0;
  std::string first2, first4;
  auto note = [](std::size_t& n, std::string& first, const char* what) {
    if (n++ == 0) first = what;
  };
  for (std::size_t t = 0; t < samples; ++t) {
    const auto a = gf::random_element(f2, rng);
    const auto b = gf::random_element(f2, rng);
    const auto fa = tower.frobenius_q(a);
    if (tower.frobenius_q(f2.add(a, b)) != f2.add(fa, tower.frobenius_q(b))) note(fail2, first2, "additive");
    if (tower.frobenius_q(f2.mul(a, b)) != f2.mul(fa, tower.frobenius_q(b))) note(fail2, first2, "multiplicative");
    if (fa != f2.pow(a, q)) note(fail2, first2, "x^q");
    if (tower.frobenius_q(fa) != a) note(fail2, first2, "order 2");
    if ((fa == a) != f2.in_base(a)) note(fail2, first2, "fixed field F_q");

    const auto x = gf::random_element(f4, rng);
    const auto y = gf::random_element(f4, rng);
    const auto fx = tower.frobenius_q(x);
    if (tower.frobenius_q(f4.add(x, y)) != f4.add(fx, tower.frobenius_q(y))) note(fail4, first4, "additive");
    if (tower.frobenius_q(f4.mul(x, y)) != f4.mul(fx, tower.frobenius_q(y))) note(fail4, first4, "multiplicative");
    if (fx != f4.pow(x, q)) note(fail4, first4, "x^q");
    const auto ffx = tower.frobenius_q(fx);
    if ((ffx == x) != f4.in_quad(x)) note(fail4, first4, "fixed field F_{q^2}");
    if (ffx != f4.conjugate(x)) note(fail4, first4, "x^{q^2} = conjugate");
  }
  return {detail::outcome("frobenius_q2", samples, fail2, first2),
          detail::outcome("frobenius_q4", samples, fail4, first4)};
}

/// x = a u + b v for random bases {u, v} of F_{q^4} over F_{q^2}, and the
/// polynomial basis {1, omega}.
inline CheckRecord expansion_roundtrip(const gf::FieldTower& tower,
                                       std::size_t samples = kDefaultSamples,
                                       std::uint64_t seed = kDefaultSeed) {
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
  const auto& f4 = tower.quart();
  std::size_t failures = 0;
  std::string first;
  for (std::size_t t = 0; t < samples; ++t) {
    const auto x = gf::random_element(f4, rng);
    std::array<gf::Fq4, 2> basis = tower.polynomial_basis();
    if (t % 2 == 1) {
      do {
        basis = {gf::random_element(f4, rng), gf::random_element(f4, rng)};
        const auto& f = tower.quad();
        const auto det = f.sub(f.mul(basis[0].lo, basis[1].hi), f.mul(basis[1].lo, basis[0].hi));
        if (det != f.zero()) break;
      } while (true);
    }
    const auto [a, b] = tower.expand_over_subfield(x, basis);
    const auto back =
        f4.add(f4.mul(tower.embed(a), basis[0]), f4.mul(tower.embed(b), basis[1]));
    if (back != x && failures++ == 0) first = "a u + b v != x";
  }
  return detail::outcome("expansion_roundtrip", samples, failures, first);
}

/// Random theta elements: the q^2-coset stays in theta, is closed, has size
/// at most 2, and every member generates the same coset; plus the full
/// decomposition shape of the family.
inline CheckRecord coset_partition(const cosets::CosetContext& ctx,
                                   std::size_t samples = kDefaultSamples,
                                   std::uint64_t seed = kDefaultSeed) {
  std::mt19937_64 rng(seed ^ ctx.q);
  std::uniform_int_distribution<std::uint64_t> pick(0, ctx.n - 1);
  std::size_t failures = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (failures++ == 0) first = what;
  };
  const auto q2 = (ctx.q * ctx.q) % ctx.modulus;
  for (std::size_t t = 0; t < samples; ++t) {
    const auto z = ctx.theta_element(pick(rng));
    const auto coset = cosets::cyclotomic_coset(z, ctx);
    if (coset.size() > 2) fail("coset size > 2 at " + std::to_string(z));
    for (auto y : coset) {
      if (!ctx.in_theta(y)) fail("leaves theta at " + std::to_string(z));
      if (!std::binary_search(coset.begin(), coset.end(), nt::mul_mod(y, q2, ctx.modulus)))
        fail("not closed at " + std::to_string(z));
      if (cosets::cyclotomic_coset(y, ctx) != coset) fail("members disagree at " + std::to_string(z));
    }
  }
  try {
    cosets::theta_decomposition(ctx);
  } catch (const std::exception& err) {
    fail(err.what());
  }
  return detail::outcome("coset_partition_" + (ctx.family ? cosets::to_string(*ctx.family) : std::string("custom")) + "_q" +
                             std::to_string(ctx.q),
                         samples, failures, first);
}

}  // namespace mdsqcc::invariants

#endif  // MDSQCC_INVARIANTS_HPP
