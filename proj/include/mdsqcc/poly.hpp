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

#ifndef MDSQCC_POLY_HPP
#define MDSQCC_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"

namespace mdsqcc {

/// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
template <class E>
struct Polynomial {
  std::vector<E> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  E coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : E{}; }
  const E& lead() const { return coeffs.back(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

namespace poly {

template <gf::FiniteField F>
Polynomial<typename F::Element> trimmed(const F& f, std::vector<typename F::Element> c) {
  while (!c.empty() && c.back() == f.zero()) c.pop_back();
  return {std::move(c)};
}

template <gf::FiniteField F>
Polynomial<typename F::Element> constant(const F& f, typename F::Element c) {
  return trimmed(f, {c});
}

/// x^k
template <gf::FiniteField F>
Polynomial<typename F::Element> monomial(const F& f, std::size_t k,
                                         typename F::Element c) {
  std::vector<typename F::Element> v(k + 1, f.zero());
  v[k] = c;
  return trimmed(f, std::move(v));
}

template <gf::FiniteField F>
Polynomial<typename F::Element> add(const F& f, const Polynomial<typename F::Element>& a,
                                    const Polynomial<typename F::Element>& b) {
  std::vector<typename F::Element> c(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.add(a.coeff(k), b.coeff(k));
  return trimmed(f, std::move(c));
}

template <gf::FiniteField F>
Polynomial<typename F::Element> sub(const F& f, const Polynomial<typename F::Element>& a,
                                    const Polynomial<typename F::Element>& b) {
  std::vector<typename F::Element> c(std::max(a.coeffs.size(), b.coeffs.size()), f.zero());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.sub(a.coeff(k), b.coeff(k));
  return trimmed(f, std::move(c));
}

template <gf::FiniteField F>
Polynomial<typename F::Element> scale(const F& f, const Polynomial<typename F::Element>& a,
                                      typename F::Element s) {
  std::vector<typename F::Element> c(a.coeffs.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.mul(a.coeffs[k], s);
  return trimmed(f, std::move(c));
}

template <gf::FiniteField F>
Polynomial<typename F::Element> mul(const F& f, const Polynomial<typename F::Element>& a,
                                    const Polynomial<typename F::Element>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<typename F::Element> c(a.coeffs.size() + b.coeffs.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == f.zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return trimmed(f, std::move(c));
}

/// (quotient, remainder) of a / b.
template <gf::FiniteField F>
std::pair<Polynomial<typename F::Element>, Polynomial<typename F::Element>> divmod(
    const F& f, const Polynomial<typename F::Element>& a,
    const Polynomial<typename F::Element>& b) {
  using E = typename F::Element;
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {{}, a};
  std::vector<E> rem = a.coeffs;
  std::vector<E> quo(a.coeffs.size() - b.coeffs.size() + 1, f.zero());
  const E lead_inv = f.inv(b.lead());
  const std::size_t db = b.coeffs.size() - 1;
  for (std::size_t k = rem.size(); k-- > db;) {
    const E c = f.mul(rem[k], lead_inv);
    if (c == f.zero()) continue;
    const std::size_t shift = k - db;
    quo[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[shift + j] = f.sub(rem[shift + j], f.mul(c, b.coeffs[j]));
    }
  }
  rem.resize(db);
  return {trimmed(f, std::move(quo)), trimmed(f, std::move(rem))};
}

template <gf::FiniteField F>
Polynomial<typename F::Element> mod(const F& f, const Polynomial<typename F::Element>& a,
                                    const Polynomial<typename F::Element>& b) {
  return divmod(f, a, b).second;
}

template <gf::FiniteField F>
Polynomial<typename F::Element> monic(const F& f, const Polynomial<typename F::Element>& a) {
  if (a.is_zero()) return a;
  return scale(f, a, f.inv(a.lead()));
}

/// Monic gcd (zero if both inputs are zero).
template <gf::FiniteField F>
Polynomial<typename F::Element> gcd(const F& f, Polynomial<typename F::Element> a,
                                    Polynomial<typename F::Element> b) {
  while (!b.is_zero()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

template <gf::FiniteField F>
typename F::Element eval(const F& f, const Polynomial<typename F::Element>& a,
                         typename F::Element x) {
  typename F::Element acc = f.zero();
  for (std::size_t k = a.coeffs.size(); k-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs[k]);
  return acc;
}

}  // namespace poly
}  // namespace mdsqcc

#endif  // MDSQCC_POLY_HPP
