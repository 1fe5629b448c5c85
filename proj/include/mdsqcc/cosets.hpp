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
 * q^2-cyclotomic cosets modulo rn and defining sets of constacyclic codes.
 *
 * The roots of X^n - lambda are beta^z for z in theta = {1 + r*i : 0 <= i < n}
 * (beta a primitive rn-th root of unity, lambda = beta^n of order r). All
 * residues are kept canonical in [0, rn).
 */

#ifndef MDSQCC_COSETS_HPP
#define MDSQCC_COSETS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numtheory.hpp"

namespace mdsqcc::cosets {

using nt::u64;
using Residue = std::uint64_t;

enum class Family { I, II };

inline std::string to_string(Family f) { return f == Family::I ? "I" : "II"; }

struct CosetContext {
  u64 q = 0;
  u64 n = 0;
  u64 r = 0;
  u64 modulus = 0;
  /// (q^2 + 1) / 2 reduced mod rn, when it lies in theta.
  std::optional<Residue> s;
  std::optional<Family> family;
  /// Family II only: q = 10m + 3 or q = 10m + 7.
  u64 m = 0;

  /// Validates gcd(n, q) = 1, r | q^2 - 1 and ord_{rn}(q^2) = 2.
  static CosetContext make(u64 q, u64 n, u64 r) {
    if (!nt::is_odd_prime_power(q)) {
      throw PreconditionError("q = " + std::to_string(q) + " is not an odd prime power");
    }
    if (n == 0 || r == 0) throw PreconditionError("n and r must be positive");
    if (std::gcd(n, q) != 1) {
      throw PreconditionError("gcd(n, q) != 1 for n = " + std::to_string(n));
    }
    if ((q * q - 1) % r != 0) {
      throw PreconditionError("r = " + std::to_string(r) + " does not divide q^2 - 1");
    }
    CosetContext ctx;
    ctx.q = q;
    ctx.n = n;
    ctx.r = r;
    ctx.modulus = r * n;
    if (nt::mult_order(q * q, ctx.modulus) != 2) {
      throw PreconditionError("ord_{rn}(q^2) != 2 for rn = " + std::to_string(ctx.modulus));
    }
    const Residue half = ((q * q + 1) / 2) % ctx.modulus;
    if (ctx.in_theta(half)) ctx.s = half;
    return ctx;
  }

  /// n = q^2 + 1, r = q + 1.
  static CosetContext family_one(u64 q) {
    if (!nt::is_odd_prime_power(q)) {
      throw PreconditionError("family I requires an odd prime power q, got " +
                              std::to_string(q));
    }
    CosetContext ctx = make(q, q * q + 1, q + 1);
    ctx.family = Family::I;
    return ctx;
  }

  /// n = (q^2 + 1) / 10, r = q + 1, for q = 10m + 3 or 10m + 7 with m >= 1.
  static CosetContext family_two(u64 q) {
    if (!nt::is_odd_prime_power(q)) {
      throw PreconditionError("family II requires an odd prime power q, got " +
                              std::to_string(q));
    }
    if (q % 10 != 3 && q % 10 != 7) {
      throw PreconditionError("family II requires q = 10m+3 or q = 10m+7 (10 | q^2+1); q = " +
                              std::to_string(q) + " is not of this form");
    }
    const u64 m = q / 10;
    if (m < 1) {
      throw PreconditionError("family II requires q = 10m+3 or q = 10m+7 with m ≥ 1; q = " +
                              std::to_string(q) + " gives m = 0");
    }
    CosetContext ctx = make(q, (q * q + 1) / 10, q + 1);
    ctx.family = Family::II;
    ctx.m = m;
    return ctx;
  }

  Residue reduce(nt::i64 z) const { return nt::reduce(z, modulus); }
  bool in_theta(Residue z) const { return z < modulus && (z + modulus - 1) % r == 0; }
  Residue theta_element(u64 i) const { return (1 + r * (i % n)) % modulus; }
  /// i with theta_element(i) == z; z must lie in theta.
  u64 theta_index(Residue z) const { return ((z + modulus - 1) % modulus) / r; }
};

struct Coset {
  Residue representative = 0;
  std::vector<Residue> members;  // sorted
};

/// {x * q^{2j} mod rn : j >= 0}, sorted.
inline std::vector<Residue> cyclotomic_coset(Residue x, const CosetContext& ctx) {
  const u64 q2 = (ctx.q * ctx.q) % ctx.modulus;
  x %= ctx.modulus;
  std::vector<Residue> out{x};
  for (Residue y = nt::mul_mod(x, q2, ctx.modulus); y != x;
       y = nt::mul_mod(y, q2, ctx.modulus)) {
    out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ThetaPartition {
  CosetContext context;
  std::vector<Coset> cosets;  // in order of first appearance along theta

  std::vector<Coset> singletons() const {
    std::vector<Coset> out;
    for (const auto& c : cosets)
      if (c.members.size() == 1) out.push_back(c);
    return out;
  }
  std::vector<Coset> pairs() const {
    std::vector<Coset> out;
    for (const auto& c : cosets)
      if (c.members.size() == 2) out.push_back(c);
    return out;
  }
};

/// Partition of theta into q^2-cyclotomic cosets, with the shape checks for
/// the two families: family I has exactly the singletons {s} and
/// {1 + r((q-1)/2 + (q^2+1)/2)}, family II only {s}; all others are pairs.
inline ThetaPartition theta_decomposition(const CosetContext& ctx) {
  ThetaPartition part{ctx, {}};
  std::set<Residue> seen;
  for (u64 i = 0; i < ctx.n; ++i) {
    const Residue z = ctx.theta_element(i);
    if (seen.count(z)) continue;
    Coset c{z, cyclotomic_coset(z, ctx)};
    for (Residue y : c.members) {
      if (!ctx.in_theta(y)) {
        throw ConsistencyError("coset of " + std::to_string(z) + " leaves theta");
      }
      if (!seen.insert(y).second) {
        throw ConsistencyError("cosets overlap at " + std::to_string(y));
      }
    }
    part.cosets.push_back(std::move(c));
  }
  if (seen.size() != ctx.n) {
    throw ConsistencyError("coset union has " + std::to_string(seen.size()) +
                           " elements, expected n = " + std::to_string(ctx.n));
  }
  for (const auto& c : part.cosets) {
    if (c.members.size() > 2) throw ConsistencyError("coset larger than 2");
  }
  if (ctx.family) {
    std::vector<Residue> expected{*ctx.s};
    if (*ctx.family == Family::I) {
      const u64 q = ctx.q;
      expected.push_back((1 + ctx.r * ((q - 1) / 2 + (q * q + 1) / 2)) % ctx.modulus);
    }
    std::sort(expected.begin(), expected.end());
    std::vector<Residue> got;
    for (const auto& c : part.singletons()) got.push_back(c.members.front());
    std::sort(got.begin(), got.end());
    if (got != expected) {
      throw ConsistencyError("singleton cosets do not match the family " +
                             to_string(*ctx.family) + " shape");
    }
  }
  return part;
}

/// Union of cosets, kept in construction order.
struct DefiningSet {
  CosetContext context;
  std::vector<Coset> cosets;
  std::vector<Residue> exponents;  // sorted

  std::size_t size() const { return exponents.size(); }
  bool contains(Residue z) const {
    return std::binary_search(exponents.begin(), exponents.end(), z % context.modulus);
  }
  /// Closed under multiplication by q^2 mod rn.
  bool is_closed() const {
    const u64 q2 = (context.q * context.q) % context.modulus;
    return std::all_of(exponents.begin(), exponents.end(), [&](Residue z) {
      return contains(nt::mul_mod(z, q2, context.modulus));
    });
  }
};

/// Defining set made of the cosets of the given representatives, in order.
inline DefiningSet defining_set_from_representatives(const CosetContext& ctx,
                                                     std::span<const Residue> reps) {
  DefiningSet z{ctx, {}, {}};
  std::set<Residue> all;
  for (Residue rep : reps) {
    rep %= ctx.modulus;
    if (!ctx.in_theta(rep)) {
      throw PreconditionError("representative " + std::to_string(rep) + " is not in theta");
    }
    Coset c{rep, cyclotomic_coset(rep, ctx)};
    for (Residue y : c.members) {
      if (!all.insert(y).second) {
        throw PreconditionError("coset of " + std::to_string(rep) +
                                " repeats an earlier coset");
      }
    }
    z.cosets.push_back(std::move(c));
  }
  z.exponents.assign(all.begin(), all.end());
  return z;
}

/// All of theta.
inline DefiningSet whole_theta(const CosetContext& ctx) {
  const auto part = theta_decomposition(ctx);
  std::vector<Residue> reps;
  for (const auto& c : part.cosets) reps.push_back(c.representative);
  return defining_set_from_representatives(ctx, reps);
}

/// s - r*j: the j-th coset of the family I defining sets.
inline Residue family_one_representative(const CosetContext& ctx, u64 j) {
  return ctx.reduce(static_cast<nt::i64>(*ctx.s) -
                    static_cast<nt::i64>(ctx.r * j));
}

/// s - r((n-1)/2 - j): the j-th coset of the family II defining sets.
inline Residue family_two_representative(const CosetContext& ctx, u64 j) {
  const nt::i64 k = static_cast<nt::i64>((ctx.n - 1) / 2) - static_cast<nt::i64>(j);
  return ctx.reduce(static_cast<nt::i64>(*ctx.s) - static_cast<nt::i64>(ctx.r) * k);
}

inline void require_family(const CosetContext& ctx, Family f) {
  if (ctx.family != f) {
    throw PreconditionError("context is not a family " + to_string(f) + " context");
  }
}

/// Cosets j = first .. last of the family I progression.
inline DefiningSet family_one_cosets(const CosetContext& ctx, u64 first, u64 last) {
  require_family(ctx, Family::I);
  std::vector<Residue> reps;
  for (u64 j = first; j <= last; ++j) reps.push_back(family_one_representative(ctx, j));
  return defining_set_from_representatives(ctx, reps);
}

/// Cosets j = first .. last of the family II progression.
inline DefiningSet family_two_cosets(const CosetContext& ctx, u64 first, u64 last) {
  require_family(ctx, Family::II);
  std::vector<Residue> reps;
  for (u64 j = first; j <= last; ++j) reps.push_back(family_two_representative(ctx, j));
  return defining_set_from_representatives(ctx, reps);
}

/// Union of C_{s - r j} for 0 <= j <= delta; requires delta <= (q-1)/2.
inline DefiningSet defining_set_family_I(const CosetContext& ctx, u64 delta) {
  require_family(ctx, Family::I);
  if (delta > (ctx.q - 1) / 2) {
    throw PreconditionError("delta = " + std::to_string(delta) + " exceeds (q-1)/2 = " +
                            std::to_string((ctx.q - 1) / 2));
  }
  return family_one_cosets(ctx, 0, delta);
}

/// Union of C_{s - r((n-1)/2 - j)} for 0 <= j <= t; requires t <= (n-1)/2 - 1.
inline DefiningSet defining_set_family_II(const CosetContext& ctx, u64 t) {
  require_family(ctx, Family::II);
  if (t + 1 > (ctx.n - 1) / 2) {
    throw PreconditionError("t = " + std::to_string(t) + " exceeds (n-1)/2 - 1 = " +
                            std::to_string((ctx.n - 1) / 2 - 1));
  }
  return family_two_cosets(ctx, 0, t);
}

/// {-q z mod rn : z in Z}, sorted.
inline std::vector<Residue> negate_q_image(const DefiningSet& z) {
  const auto& ctx = z.context;
  const u64 neg_q = ctx.modulus - ctx.q % ctx.modulus;
  std::vector<Residue> out;
  out.reserve(z.exponents.size());
  for (Residue x : z.exponents) out.push_back(nt::mul_mod(x, neg_q, ctx.modulus));
  std::sort(out.begin(), out.end());
  return out;
}

/// Z and its -q image are disjoint.
inline bool is_dual_containing(const DefiningSet& z) {
  const auto img = negate_q_image(z);
  return std::none_of(img.begin(), img.end(), [&](Residue x) { return z.contains(x); });
}

}  // namespace mdsqcc::cosets

#endif  // MDSQCC_COSETS_HPP
