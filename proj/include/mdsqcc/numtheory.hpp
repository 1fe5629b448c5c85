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

#ifndef MDSQCC_NUMTHEORY_HPP
#define MDSQCC_NUMTHEORY_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mdsqcc::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;

constexpr u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Canonical residue of a (possibly negative) integer in [0, m).
constexpr u64 reduce(i64 a, u64 m) {
  const i64 mm = static_cast<i64>(m);
  i64 r = a % mm;
  if (r < 0) r += mm;
  return static_cast<u64>(r);
}

constexpr bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct PrimePower {
  u64 p = 0;
  unsigned e = 0;
};

inline std::optional<PrimePower> as_prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  const auto primes = prime_factors(q);
  if (primes.size() != 1) return std::nullopt;
  PrimePower pp{primes.front(), 0};
  while (q > 1) {
    q /= pp.p;
    ++pp.e;
  }
  return pp;
}

inline bool is_odd_prime_power(u64 q) {
  const auto pp = as_prime_power(q);
  return pp && pp->p != 2;
}

/// Saturating integer power; returns UINT64_MAX on overflow.
constexpr u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned k = 0; k < exp; ++k) {
    if (base != 0 && r > std::numeric_limits<u64>::max() / base) {
      return std::numeric_limits<u64>::max();
    }
    r *= base;
  }
  return r;
}

/// Saturating binomial coefficient; returns UINT64_MAX on overflow.
constexpr u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (u64 j = 1; j <= k; ++j) {
    r = r * (n - k + j) / j;
    if (r > std::numeric_limits<u64>::max()) return std::numeric_limits<u64>::max();
  }
  return static_cast<u64>(r);
}

/// Smallest t >= 1 with a^t = 1 (mod m).
inline u64 mult_order(u64 a, u64 m) {
  if (m == 0) throw PreconditionError("mult_order: modulus must be positive");
  if (m == 1) return 1;
  a %= m;
  if (std::gcd(a, m) != 1) {
    throw PreconditionError("mult_order: gcd(" + std::to_string(a) + ", " +
                            std::to_string(m) + ") != 1");
  }
  u64 x = a;
  u64 t = 1;
  while (x != 1) {
    x = mul_mod(x, a, m);
    ++t;
  }
  return t;
}

}  // namespace mdsqcc::nt

#endif  // MDSQCC_NUMTHEORY_HPP
