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
 * Exact arithmetic in the tower F_q < F_{q^2} < F_{q^4} for odd prime powers q.
 *
 * Each level is a quadratic extension of the one below it (the base F_q is a
 * degree-e extension of F_p). Elements are stored as their coordinate vector
 * over F_p packed little-endian in base p, so for x = a + b*w at any level the
 * index is index(a) + |lower| * index(b). F_q and F_{q^2} multiply through
 * log/antilog tables; F_{q^4} multiplies through its quadratic relation.
 */

#ifndef MDSQCC_GF_HPP
#define MDSQCC_GF_HPP

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numtheory.hpp"

namespace mdsqcc::gf {

using nt::u64;

/// Element of F_q.
struct Fq {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

/// Element of F_{q^2}: index lo + q * hi for lo + hi * y.
struct Fq2 {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(Fq2, Fq2) = default;
};

/// Element of F_{q^4}: lo + hi * w, w the adjoined root over F_{q^2}.
struct Fq4 {
  Fq2 lo;
  Fq2 hi;
  friend constexpr auto operator<=>(const Fq4&, const Fq4&) = default;
};

template <class F>
concept FiniteField = requires(const F& f, typename F::Element a, u64 k) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.pow(a, k) } -> std::same_as<typename F::Element>;
  { f.size() } -> std::convertible_to<u64>;
  { f.index(a) } -> std::convertible_to<u64>;
  { f.from_index(k) } -> std::same_as<typename F::Element>;
};

namespace detail {

using DigitPoly = std::vector<std::uint32_t>;  // over F_p, lowest degree first

inline void trim(DigitPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline DigitPoly poly_mod(DigitPoly a, const DigitPoly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv =
      static_cast<std::uint32_t>(nt::pow_mod(f.back(), p - 2, p));
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint32_t c = static_cast<std::uint32_t>(
        static_cast<u64>(a.back()) * lead_inv % p);
    for (std::size_t j = 0; j <= df; ++j) {
      a[shift + j] = static_cast<std::uint32_t>(
          (a[shift + j] + static_cast<u64>(p - c) * f[j]) % p);
    }
    trim(a);
  }
  return a;
}

inline DigitPoly poly_mulmod(const DigitPoly& a, const DigitPoly& b,
                             const DigitPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  DigitPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

inline DigitPoly poly_powmod(DigitPoly base, u64 e, const DigitPoly& f,
                             std::uint32_t p) {
  DigitPoly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1U) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return r;
}

inline DigitPoly poly_gcd(DigitPoly a, DigitPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    DigitPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline DigitPoly poly_sub(DigitPoly a, const DigitPoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

/// Rabin's irreducibility test for a monic polynomial over F_p.
inline bool is_irreducible_over_prime_field(const DigitPoly& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  const DigitPoly x{0, 1};
  auto x_pow_p_power = [&](std::size_t k) {
    DigitPoly r = x;
    for (std::size_t j = 0; j < k; ++j) r = poly_powmod(r, p, f, p);
    return r;
  };
  if (!poly_sub(x_pow_p_power(d), x, p).empty()) return false;
  for (u64 ell : nt::prime_factors(d)) {
    DigitPoly g = poly_gcd(f, poly_sub(x_pow_p_power(d / ell), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

template <class Field, class Element>
Element square_and_multiply(const Field& f, Element x, u64 e) {
  Element r = f.one();
  while (e > 0) {
    if (e & 1U) r = f.mul(r, x);
    x = f.mul(x, x);
    e >>= 1U;
  }
  return r;
}

template <class MulFn, class Element>
bool has_full_order(MulFn mul, Element x, Element one, u64 group_order) {
  auto power = [&](u64 e) {
    Element r = one;
    Element b = x;
    while (e > 0) {
      if (e & 1U) r = mul(r, b);
      b = mul(b, b);
      e >>= 1U;
    }
    return r;
  };
  if (power(group_order) != one) return false;
  for (u64 ell : nt::prime_factors(group_order)) {
    if (power(group_order / ell) == one) return false;
  }
  return true;
}

}  // namespace detail

/// F_q = F_p[x]/(f) with f the lexicographically smallest monic irreducible of
/// degree e (coefficient list c_0, c_1, ... compared from c_0).
class BaseField {
 public:
  using Element = Fq;

  BaseField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    q_ = static_cast<std::uint32_t>(nt::ipow(p, e));
    find_defining_polynomial();
    build_tables();
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  u64 size() const { return q_; }
  u64 group_order() const { return q_ - 1; }

  Fq zero() const { return {0}; }
  Fq one() const { return {1}; }
  Fq add(Fq a, Fq b) const { return {add_[a.v * q_ + b.v]}; }
  Fq neg(Fq a) const { return {neg_[a.v]}; }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return {exp_[(log_[a.v] + log_[b.v]) % (q_ - 1)]};
  }
  Fq inv(Fq a) const {
    if (a.v == 0) throw PreconditionError("inverse of zero in F_q");
    return {exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
  }
  Fq pow(Fq a, u64 k) const {
    if (k == 0) return one();
    if (a.v == 0) return zero();
    return {exp_[static_cast<std::uint32_t>(
        (static_cast<u64>(log_[a.v]) * (k % (q_ - 1))) % (q_ - 1))]};
  }
  u64 index(Fq a) const { return a.v; }
  Fq from_index(u64 i) const { return {static_cast<std::uint32_t>(i)}; }

  /// Monic defining polynomial over F_p, lowest degree first.
  const std::vector<std::uint32_t>& defining_polynomial() const { return poly_; }

  /// Coordinates over F_p in the basis 1, x, ..., x^{e-1}.
  std::vector<std::uint32_t> coords(Fq a) const {
    std::vector<std::uint32_t> c(e_);
    std::uint32_t v = a.v;
    for (auto& d : c) {
      d = v % p_;
      v /= p_;
    }
    return c;
  }

 private:
  std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const {
    detail::DigitPoly pa(e_), pb(e_);
    for (std::uint32_t k = 0; k < e_; ++k) {
      pa[k] = a % p_;
      a /= p_;
      pb[k] = b % p_;
      b /= p_;
    }
    const auto r = detail::poly_mulmod(pa, pb, poly_, p_);
    std::uint32_t out = 0;
    for (std::size_t k = r.size(); k-- > 0;) out = out * p_ + r[k];
    return out;
  }

  void find_defining_polynomial() {
    // Candidates enumerated with c_0 as the most significant digit.
    for (u64 t = 0; t < q_; ++t) {
      detail::DigitPoly f(e_ + 1, 0);
      f[e_] = 1;
      u64 v = t;
      for (std::uint32_t k = e_; k-- > 0;) {
        f[k] = static_cast<std::uint32_t>(v % p_);
        v /= p_;
      }
      if (detail::is_irreducible_over_prime_field(f, p_)) {
        poly_ = f;
        return;
      }
    }
    throw ConsistencyError("no irreducible polynomial found over F_p");
  }

  void build_tables() {
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t x = a, y = b, out = 0, scale = 1;
        for (std::uint32_t k = 0; k < e_; ++k) {
          out += ((x % p_ + y % p_) % p_) * scale;
          x /= p_;
          y /= p_;
          scale *= p_;
        }
        add_[static_cast<std::size_t>(a) * q_ + b] = out;
        if (out == 0) neg_[a] = b;
      }
    }
    auto mul = [this](std::uint32_t a, std::uint32_t b) { return raw_mul(a, b); };
    std::uint32_t g = 1;
    while (!detail::has_full_order(mul, g, 1U, q_ - 1)) ++g;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
      exp_[k] = cur;
      log_[cur] = k;
      cur = raw_mul(cur, g);
    }
  }

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_ = 0;
  detail::DigitPoly poly_;
  std::vector<std::uint32_t> add_, neg_, exp_, log_;
};

/// F_{q^2} = F_q[y]/(y^2 + c1 y + c0).
class QuadField {
 public:
  using Element = Fq2;

  explicit QuadField(BaseField base) : base_(std::move(base)) {
    q_ = static_cast<std::uint32_t>(base_.size());
    size_ = q_ * q_;
    find_defining_polynomial();
    build_tables();
  }

  const BaseField& base() const { return base_; }
  u64 size() const { return size_; }
  u64 group_order() const { return size_ - 1; }

  Fq2 zero() const { return {0}; }
  Fq2 one() const { return {1}; }
  Fq lo(Fq2 a) const { return {lo_[a.v]}; }
  Fq hi(Fq2 a) const { return {hi_[a.v]}; }
  Fq2 make(Fq lo, Fq hi) const { return {lo.v + q_ * hi.v}; }
  Fq2 embed(Fq a) const { return {a.v}; }
  bool in_base(Fq2 a) const { return hi_[a.v] == 0; }

  Fq2 add(Fq2 a, Fq2 b) const {
    return make(base_.add(lo(a), lo(b)), base_.add(hi(a), hi(b)));
  }
  Fq2 neg(Fq2 a) const { return make(base_.neg(lo(a)), base_.neg(hi(a))); }
  Fq2 sub(Fq2 a, Fq2 b) const {
    return make(base_.sub(lo(a), lo(b)), base_.sub(hi(a), hi(b)));
  }
  Fq2 mul(Fq2 a, Fq2 b) const {
    if (a.v == 0 || b.v == 0) return {0};
    std::uint32_t s = log_[a.v] + log_[b.v];
    if (s >= size_ - 1) s -= size_ - 1;
    return {exp_[s]};
  }
  Fq2 inv(Fq2 a) const {
    if (a.v == 0) throw PreconditionError("inverse of zero in F_{q^2}");
    return {exp_[(size_ - 1 - log_[a.v]) % (size_ - 1)]};
  }
  Fq2 div(Fq2 a, Fq2 b) const { return mul(a, inv(b)); }
  Fq2 pow(Fq2 a, u64 k) const {
    if (k == 0) return one();
    if (a.v == 0) return zero();
    return {exp_[static_cast<std::uint32_t>(
        (static_cast<u64>(log_[a.v]) * (k % (size_ - 1))) % (size_ - 1))]};
  }
  /// x -> x^q, the nontrivial automorphism over F_q.
  Fq2 frobenius(Fq2 a) const { return {frob_[a.v]}; }
  u64 index(Fq2 a) const { return a.v; }
  Fq2 from_index(u64 i) const { return {static_cast<std::uint32_t>(i)}; }

  /// (c0, c1, 1) of the monic defining polynomial.
  std::array<Fq, 3> defining_polynomial() const { return {c0_, c1_, base_.one()}; }

  std::vector<std::uint32_t> coords(Fq2 a) const {
    auto c = base_.coords(lo(a));
    const auto h = base_.coords(hi(a));
    c.insert(c.end(), h.begin(), h.end());
    return c;
  }

 private:
  Fq2 raw_mul(Fq2 a, Fq2 b) const {
    // (a0 + a1 y)(b0 + b1 y) with y^2 = -c1 y - c0.
    const Fq a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    const Fq t = base_.mul(a1, b1);
    const Fq r0 = base_.sub(base_.mul(a0, b0), base_.mul(t, c0_));
    const Fq r1 = base_.sub(base_.add(base_.mul(a0, b1), base_.mul(a1, b0)),
                            base_.mul(t, c1_));
    return make(r0, r1);
  }

  void find_defining_polynomial() {
    lo_.resize(size_);
    hi_.resize(size_);
    for (std::uint32_t v = 0; v < size_; ++v) {
      lo_[v] = v % q_;
      hi_[v] = v / q_;
    }
    for (std::uint32_t c0 = 0; c0 < q_; ++c0) {
      for (std::uint32_t c1 = 0; c1 < q_; ++c1) {
        bool has_root = false;
        for (std::uint32_t y = 0; y < q_ && !has_root; ++y) {
          const Fq fy{y};
          const Fq val = base_.add(base_.add(base_.mul(fy, fy), base_.mul(Fq{c1}, fy)), Fq{c0});
          has_root = val.v == 0;
        }
        if (!has_root) {
          c0_ = {c0};
          c1_ = {c1};
          return;
        }
      }
    }
    throw ConsistencyError("no irreducible quadratic over F_q");
  }

  void build_tables() {
    auto mul = [this](Fq2 a, Fq2 b) { return raw_mul(a, b); };
    std::uint32_t g = 1;
    while (!detail::has_full_order(mul, Fq2{g}, Fq2{1}, size_ - 1)) ++g;
    exp_.assign(size_ - 1, 0);
    log_.assign(size_, 0);
    Fq2 cur{1};
    for (std::uint32_t k = 0; k + 1 < size_; ++k) {
      exp_[k] = cur.v;
      log_[cur.v] = k;
      cur = raw_mul(cur, Fq2{g});
    }
    frob_.assign(size_, 0);
    for (std::uint32_t v = 1; v < size_; ++v) {
      frob_[v] = exp_[static_cast<std::uint32_t>(
          static_cast<u64>(log_[v]) * q_ % (size_ - 1))];
    }
  }

  BaseField base_;
  std::uint32_t q_ = 0;
  std::uint32_t size_ = 0;
  Fq c0_, c1_;
  std::vector<std::uint32_t> lo_, hi_, exp_, log_, frob_;
};

/// F_{q^4} = F_{q^2}[w]/(w^2 + d1 w + d0).
class QuartField {
 public:
  using Element = Fq4;

  explicit QuartField(QuadField quad) : quad_(std::move(quad)) {
    q2_ = quad_.size();
    find_defining_polynomial();
    omega_q_ = pow(Fq4{quad_.zero(), quad_.one()}, quad_.base().size());
  }

  const QuadField& quad() const { return quad_; }
  u64 size() const { return q2_ * q2_; }
  u64 group_order() const { return size() - 1; }

  Fq4 zero() const { return {}; }
  Fq4 one() const { return {quad_.one(), quad_.zero()}; }
  Fq4 omega() const { return {quad_.zero(), quad_.one()}; }
  Fq4 embed(Fq2 a) const { return {a, quad_.zero()}; }
  bool in_quad(const Fq4& a) const { return a.hi.v == 0; }

  Fq4 add(const Fq4& a, const Fq4& b) const {
    return {quad_.add(a.lo, b.lo), quad_.add(a.hi, b.hi)};
  }
  Fq4 neg(const Fq4& a) const { return {quad_.neg(a.lo), quad_.neg(a.hi)}; }
  Fq4 sub(const Fq4& a, const Fq4& b) const {
    return {quad_.sub(a.lo, b.lo), quad_.sub(a.hi, b.hi)};
  }
  Fq4 mul(const Fq4& a, const Fq4& b) const {
    // w^2 = -d1 w - d0.
    const Fq2 t = quad_.mul(a.hi, b.hi);
    return {quad_.sub(quad_.mul(a.lo, b.lo), quad_.mul(t, d0_)),
            quad_.sub(quad_.add(quad_.mul(a.lo, b.hi), quad_.mul(a.hi, b.lo)),
                      quad_.mul(t, d1_))};
  }
  /// x^{q^2}: the conjugate over F_{q^2} (w maps to the other root -d1 - w).
  Fq4 conjugate(const Fq4& a) const {
    return {quad_.sub(a.lo, quad_.mul(a.hi, d1_)), quad_.neg(a.hi)};
  }
  Fq4 inv(const Fq4& a) const {
    if (a == zero()) throw PreconditionError("inverse of zero in F_{q^4}");
    const Fq4 c = conjugate(a);
    const Fq4 norm = mul(a, c);
    const Fq2 ni = quad_.inv(norm.lo);
    return {quad_.mul(c.lo, ni), quad_.mul(c.hi, ni)};
  }
  Fq4 pow(Fq4 a, u64 k) const { return detail::square_and_multiply(*this, a, k); }
  /// x -> x^q.
  Fq4 frobenius(const Fq4& a) const {
    return add(embed(quad_.frobenius(a.lo)), mul(embed(quad_.frobenius(a.hi)), omega_q_));
  }
  u64 index(const Fq4& a) const { return a.lo.v + q2_ * a.hi.v; }
  Fq4 from_index(u64 i) const {
    return {Fq2{static_cast<std::uint32_t>(i % q2_)},
            Fq2{static_cast<std::uint32_t>(i / q2_)}};
  }

  std::array<Fq2, 3> defining_polynomial() const { return {d0_, d1_, quad_.one()}; }

  std::vector<std::uint32_t> coords(const Fq4& a) const {
    auto c = quad_.coords(a.lo);
    const auto h = quad_.coords(a.hi);
    c.insert(c.end(), h.begin(), h.end());
    return c;
  }

 private:
  void find_defining_polynomial() {
    for (u64 c0 = 0; c0 < q2_; ++c0) {
      for (u64 c1 = 0; c1 < q2_; ++c1) {
        const Fq2 d0{static_cast<std::uint32_t>(c0)};
        const Fq2 d1{static_cast<std::uint32_t>(c1)};
        bool has_root = false;
        for (u64 y = 0; y < q2_ && !has_root; ++y) {
          const Fq2 fy{static_cast<std::uint32_t>(y)};
          has_root = quad_.add(quad_.add(quad_.mul(fy, fy), quad_.mul(d1, fy)), d0).v == 0;
        }
        if (!has_root) {
          d0_ = d0;
          d1_ = d1;
          return;
        }
      }
    }
    throw ConsistencyError("no irreducible quadratic over F_{q^2}");
  }

  QuadField quad_;
  u64 q2_ = 0;
  Fq2 d0_, d1_;
  Fq4 omega_q_;
};

/// Multiplicative order of a nonzero element.
template <FiniteField F>
u64 element_order(const F& field, const typename F::Element& x) {
  if (x == field.zero()) throw PreconditionError("element_order: zero has no order");
  u64 order = field.size() - 1;
  for (u64 ell : nt::prime_factors(order)) {
    while (order % ell == 0 && field.pow(x, order / ell) == field.one()) order /= ell;
  }
  return order;
}

template <FiniteField F, class Rng>
typename F::Element random_element(const F& field, Rng& rng) {
  std::uniform_int_distribution<u64> dist(0, field.size() - 1);
  return field.from_index(dist(rng));
}

/// The tower F_q < F_{q^2} < F_{q^4}. Immutable after construction.
class FieldTower {
 public:
  /// Largest supported q (keeps F_{q^4} indices within 32 bits).
  static constexpr u64 kMaxQ = 255;

  FieldTower(u64 p, u64 e) : quart_(validated(p, e)) {
    generator_ = find_generator();
  }

  u64 p() const { return quart_.quad().base().characteristic(); }
  u64 e() const { return quart_.quad().base().degree(); }
  u64 q() const { return quart_.quad().base().size(); }

  const BaseField& base() const { return quart_.quad().base(); }
  const QuadField& quad() const { return quart_.quad(); }
  const QuartField& quart() const { return quart_; }

  Fq2 embed(Fq a) const { return quad().embed(a); }
  Fq4 embed(Fq2 a) const { return quart_.embed(a); }

  Fq frobenius_q(Fq a) const { return a; }
  Fq2 frobenius_q(Fq2 a) const { return quad().frobenius(a); }
  Fq4 frobenius_q(const Fq4& a) const { return quart_.frobenius(a); }

  /// Smallest-index generator of F_{q^4}^*.
  Fq4 generator() const { return generator_; }

  /// Element of exact multiplicative order n in F_{q^4}: generator^((q^4-1)/n).
  Fq4 primitive_root_of_unity(u64 n) const {
    const u64 order = quart_.group_order();
    if (n == 0 || order % n != 0) {
      throw PreconditionError("primitive_root_of_unity: " + std::to_string(n) +
                              " does not divide q^4 - 1 = " + std::to_string(order));
    }
    return quart_.pow(generator_, order / n);
  }

  /// {1, w}: the F_{q^2}-basis in which F_{q^4} elements are stored.
  std::array<Fq4, 2> polynomial_basis() const { return {quart_.one(), quart_.omega()}; }

  /// (a, b) with x = a * basis[0] + b * basis[1], a, b in F_{q^2}.
  std::pair<Fq2, Fq2> expand_over_subfield(const Fq4& x,
                                           const std::array<Fq4, 2>& basis) const {
    const QuadField& f = quad();
    const Fq4& u = basis[0];
    const Fq4& v = basis[1];
    const Fq2 det = f.sub(f.mul(u.lo, v.hi), f.mul(v.lo, u.hi));
    if (det == f.zero()) {
      throw PreconditionError("expand_over_subfield: basis is dependent over F_{q^2}");
    }
    const Fq2 di = f.inv(det);
    const Fq2 a = f.mul(f.sub(f.mul(x.lo, v.hi), f.mul(v.lo, x.hi)), di);
    const Fq2 b = f.mul(f.sub(f.mul(u.lo, x.hi), f.mul(x.lo, u.hi)), di);
    return {a, b};
  }

  /// Defining polynomials of the three levels, each coefficient given as its
  /// coordinate vector over F_p, lowest degree first.
  std::vector<std::vector<std::vector<std::uint32_t>>> defining_polynomials() const {
    std::vector<std::vector<std::vector<std::uint32_t>>> out(3);
    for (auto c : base().defining_polynomial()) out[0].push_back({c});
    for (auto c : quad().defining_polynomial()) out[1].push_back(base().coords(c));
    for (auto c : quart_.defining_polynomial()) out[2].push_back(quad().coords(c));
    return out;
  }

 private:
  static QuadField validated(u64 p, u64 e) {
    if (!nt::is_prime(p)) {
      throw PreconditionError("make_tower: p = " + std::to_string(p) + " is not prime");
    }
    if (p == 2) {
      throw PreconditionError("make_tower: characteristic 2 is not supported (q must be odd)");
    }
    if (e == 0) throw PreconditionError("make_tower: exponent e must be positive");
    const u64 q = nt::ipow(p, static_cast<unsigned>(e));
    if (q > kMaxQ) {
      throw PreconditionError("make_tower: q = " + std::to_string(p) + "^" +
                              std::to_string(e) + " exceeds the supported maximum " +
                              std::to_string(kMaxQ));
    }
    return QuadField(BaseField(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e)));
  }

  Fq4 find_generator() const {
    auto mul = [this](const Fq4& a, const Fq4& b) { return quart_.mul(a, b); };
    for (u64 i = 1; i < quart_.size(); ++i) {
      const Fq4 x = quart_.from_index(i);
      if (detail::has_full_order(mul, x, quart_.one(), quart_.group_order())) return x;
    }
    throw ConsistencyError("F_{q^4} has no generator");
  }

  QuartField quart_;
  Fq4 generator_;
};

inline FieldTower make_tower(u64 p, u64 e) { return FieldTower(p, e); }

}  // namespace mdsqcc::gf

#endif  // MDSQCC_GF_HPP
