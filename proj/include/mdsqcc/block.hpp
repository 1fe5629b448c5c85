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
 * Constacyclic codes over F_{q^2} and the exhaustive distance oracles.
 *
 * A code is fixed by its defining set Z: the generator polynomial is the
 * product of (X - beta^z) over Z. The raw parity-check matrix has one row per
 * coset representative z with entries beta^{z j} in F_{q^4}; expanding each
 * entry in the basis {1, w} of F_{q^4} over F_{q^2} and dropping dependent
 * rows (earliest rows win) gives the F_{q^2} parity-check matrix.
 */

#ifndef MDSQCC_BLOCK_HPP
#define MDSQCC_BLOCK_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cosets.hpp"
#include "errors.hpp"
#include "gf.hpp"
#include "matrix.hpp"
#include "numtheory.hpp"
#include "poly.hpp"

namespace mdsqcc::block {

using gf::Fq2;
using gf::Fq4;
using nt::u64;

struct ConstacyclicCode {
  std::shared_ptr<const gf::FieldTower> tower;
  cosets::DefiningSet zset;
  Fq4 beta;
  Fq2 lambda;
  Polynomial<Fq2> genpoly;
  Matrix<Fq4> check_raw;
  Matrix<Fq2> check_expanded;
  /// Surviving expanded rows contributed by each coset, in coset order.
  std::vector<std::size_t> rows_per_coset;

  const cosets::CosetContext& context() const { return zset.context; }
  std::size_t length() const { return context().n; }
  std::size_t codimension() const { return zset.size(); }
  std::size_t dimension() const { return length() - codimension(); }
};

/// Rows beta^{z j}, j = 0..n-1, one per coset representative in coset order.
inline Matrix<Fq4> parity_check_raw(const gf::FieldTower& tower, const Fq4& beta,
                                    const cosets::DefiningSet& z) {
  const auto& f = tower.quart();
  const std::size_t n = z.context.n;
  Matrix<Fq4> h(0, n);
  std::vector<Fq4> row(n);
  for (const auto& c : z.cosets) {
    const Fq4 step = f.pow(beta, c.representative);
    Fq4 cur = f.one();
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = cur;
      cur = f.mul(cur, step);
    }
    h.append_row(row);
  }
  return h;
}

inline Matrix<Fq4> parity_check_raw(const ConstacyclicCode& code) {
  return parity_check_raw(*code.tower, code.beta, code.zset);
}

struct ExpandedCheck {
  Matrix<Fq2> matrix;
  std::vector<std::size_t> rows_per_coset;
};

/// Each raw row becomes its two coordinate rows over F_{q^2}; rows dependent
/// on earlier ones are dropped. The result must have exactly |Z| rows.
inline ExpandedCheck expand_check(const gf::FieldTower& tower, const Matrix<Fq4>& raw,
                                  const cosets::DefiningSet& z) {
  Matrix<Fq2> both(0, raw.cols());
  std::vector<Fq2> lo(raw.cols()), hi(raw.cols());
  for (std::size_t r = 0; r < raw.rows(); ++r) {
    for (std::size_t j = 0; j < raw.cols(); ++j) {
      lo[j] = raw(r, j).lo;
      hi[j] = raw(r, j).hi;
    }
    both.append_row(lo);
    both.append_row(hi);
  }
  const auto kept = independent_rows(tower.quad(), both);
  ExpandedCheck out{select_rows(both, kept), std::vector<std::size_t>(raw.rows(), 0)};
  for (std::size_t r : kept) ++out.rows_per_coset[r / 2];
  if (out.matrix.rows() != z.size()) {
    throw ConsistencyError("expanded parity check has rank " +
                           std::to_string(out.matrix.rows()) + ", expected |Z| = " +
                           std::to_string(z.size()));
  }
  for (std::size_t c = 0; c < z.cosets.size() && c < raw.rows(); ++c) {
    if (out.rows_per_coset[c] != z.cosets[c].members.size()) {
      throw ConsistencyError("coset " + std::to_string(z.cosets[c].representative) +
                             " contributes " + std::to_string(out.rows_per_coset[c]) +
                             " rows, expected its size");
    }
  }
  return out;
}

inline ExpandedCheck expand_check(const ConstacyclicCode& code) {
  return expand_check(*code.tower, code.check_raw, code.zset);
}

/// X^n - lambda over F_{q^2}.
inline Polynomial<Fq2> constacyclic_modulus(const gf::QuadField& f, std::size_t n,
                                            Fq2 lambda) {
  auto p = poly::monomial(f, n, f.one());
  p.coeffs[0] = f.sub(p.coeffs[0], lambda);
  return poly::trimmed(f, p.coeffs);
}

/// Builds the lambda-constacyclic code with defining set z, lambda = beta^n for
/// the canonical primitive rn-th root beta of the tower.
inline ConstacyclicCode build_code(std::shared_ptr<const gf::FieldTower> tower,
                                   const cosets::DefiningSet& z) {
  const auto& ctx = z.context;
  if (tower->q() != ctx.q) {
    throw PreconditionError("tower has q = " + std::to_string(tower->q()) +
                            " but the context has q = " + std::to_string(ctx.q));
  }
  if (!z.is_closed()) {
    throw PreconditionError("defining set is not closed under multiplication by q^2");
  }
  for (auto e : z.exponents) {
    if (!ctx.in_theta(e)) {
      throw PreconditionError("exponent " + std::to_string(e) + " is not in theta");
    }
  }
  const auto& f4 = tower->quart();
  const auto& f2 = tower->quad();

  ConstacyclicCode code;
  code.tower = tower;
  code.zset = z;
  code.beta = tower->primitive_root_of_unity(ctx.modulus);
  const Fq4 lambda4 = f4.pow(code.beta, ctx.n);
  if (!f4.in_quad(lambda4)) throw ConsistencyError("beta^n is not in F_{q^2}");
  code.lambda = lambda4.lo;
  if (gf::element_order(f2, code.lambda) != ctx.r) {
    throw ConsistencyError("lambda does not have order r");
  }

  Polynomial<Fq4> g4 = poly::constant(f4, f4.one());
  for (auto e : z.exponents) {
    g4 = poly::mul(f4, g4, Polynomial<Fq4>{{f4.neg(f4.pow(code.beta, e)), f4.one()}});
  }
  std::vector<Fq2> g2;
  for (const auto& c : g4.coeffs) {
    if (!f4.in_quad(c)) {
      throw PreconditionError("generator polynomial has a coefficient outside F_{q^2}");
    }
    g2.push_back(c.lo);
  }
  code.genpoly = poly::trimmed(f2, std::move(g2));
  const auto [quo, rem] =
      poly::divmod(f2, constacyclic_modulus(f2, ctx.n, code.lambda), code.genpoly);
  if (!rem.is_zero()) throw ConsistencyError("generator polynomial does not divide X^n - lambda");

  code.check_raw = parity_check_raw(*tower, code.beta, z);
  auto expanded = expand_check(*tower, code.check_raw, z);
  code.check_expanded = std::move(expanded.matrix);
  code.rows_per_coset = std::move(expanded.rows_per_coset);
  return code;
}

/// One more than the longest cyclic run of consecutive theta indices in Z
/// (consecutive roots beta^{1+ri}, beta^{1+r(i+1)}, ...).
inline std::size_t bch_lower_bound(const cosets::DefiningSet& z) {
  const auto& ctx = z.context;
  if (z.size() == 0) return 1;
  std::vector<bool> mark(ctx.n, false);
  for (auto e : z.exponents) mark[ctx.theta_index(e)] = true;
  if (z.size() >= ctx.n) return ctx.n + 1;
  // Start just after a gap so the cyclic run is not split.
  std::size_t start = 0;
  while (mark[start]) ++start;
  std::size_t best = 0, run = 0;
  for (std::size_t k = 1; k <= ctx.n; ++k) {
    if (mark[(start + k) % ctx.n]) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best + 1;
}

/// Closed interval known for the minimum distance.
struct DistanceInterval {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact() const { return lower == upper; }
};

/// [BCH bound, Singleton bound].
inline DistanceInterval distance_interval(const ConstacyclicCode& code) {
  return {bch_lower_bound(code.zset), code.codimension() + 1};
}

struct ColumnCertificate {
  bool passed = false;
  /// Lexicographically first dependent column subset when !passed.
  std::vector<std::size_t> witness;
  u64 subsets = 0;
};

/// True iff every w columns of h are linearly independent over F_{q^2}, i.e.
/// the code with parity-check matrix h has minimum distance > w.
inline ColumnCertificate certify_distance_columns(const gf::QuadField& f,
                                                  const Matrix<Fq2>& h, std::size_t w,
                                                  u64 budget) {
  const std::size_t n = h.cols();
  const std::size_t rows = h.rows();
  ColumnCertificate out;
  if (w > n) throw PreconditionError("certify_distance_columns: w exceeds the code length");
  out.subsets = nt::binomial(n, w);
  if (w == 0) {
    out.passed = true;
    return out;
  }
  if (out.subsets > budget) {
    throw BudgetExceeded("column oracle needs C(" + std::to_string(n) + ", " +
                         std::to_string(w) + ") = " + std::to_string(out.subsets) +
                         " rank checks, budget is " + std::to_string(budget));
  }
  if (w > rows) {
    for (std::size_t j = 0; j < w; ++j) out.witness.push_back(j);
    return out;
  }

  std::vector<std::vector<Fq2>> cols(n, std::vector<Fq2>(rows));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < n; ++c) cols[c][r] = h(r, c);

  const std::size_t tasks = n - w + 1;
  std::vector<std::optional<std::vector<std::size_t>>> found(tasks);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{tasks};

  auto run_task = [&](std::size_t first) {
    // basis[d] is the reduced form of the d-th chosen column, pivot[d] its pivot.
    std::vector<std::vector<Fq2>> basis(w, std::vector<Fq2>(rows));
    std::vector<std::size_t> pivot(w), chosen(w);
    auto reduce_into = [&](std::size_t depth, std::size_t col) {
      auto& v = basis[depth];
      v = cols[col];
      for (std::size_t k = 0; k < depth; ++k) {
        const Fq2 c = v[pivot[k]];
        if (c == f.zero()) continue;
        const auto& b = basis[k];
        for (std::size_t r = 0; r < rows; ++r) {
          if (b[r] != f.zero()) v[r] = f.sub(v[r], f.mul(c, b[r]));
        }
      }
      std::size_t p = 0;
      while (p < rows && v[p] == f.zero()) ++p;
      if (p == rows) return false;
      const Fq2 inv = f.inv(v[p]);
      for (auto& x : v) x = f.mul(x, inv);
      pivot[depth] = p;
      return true;
    };
    auto witness_from = [&](std::size_t depth) {
      std::vector<std::size_t> wit(chosen.begin(), chosen.begin() + depth + 1);
      for (std::size_t c = chosen[depth] + 1; wit.size() < w; ++c) wit.push_back(c);
      return wit;
    };
    chosen[0] = first;
    if (!reduce_into(0, first)) {
      found[first] = witness_from(0);
      return;
    }
    if (w == 1) return;
    std::size_t depth = 1;
    chosen[1] = first;
    while (true) {
      if (first_hit.load(std::memory_order_relaxed) < first) return;
      const std::size_t c = ++chosen[depth];
      if (c > n - w + depth) {
        if (depth == 1) return;
        --depth;
        continue;
      }
      if (!reduce_into(depth, c)) {
        found[first] = witness_from(depth);
        return;
      }
      if (depth + 1 < w) {
        ++depth;
        chosen[depth] = c;
      }
    }
  };

  auto worker = [&] {
    for (std::size_t t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) {
      if (first_hit.load() < t) break;
      run_task(t);
      if (found[t]) {
        std::size_t cur = first_hit.load();
        while (t < cur && !first_hit.compare_exchange_weak(cur, t)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  for (std::size_t t = 0; t < tasks; ++t) {
    if (found[t]) {
      out.witness = *found[t];
      return out;
    }
  }
  out.passed = true;
  return out;
}

inline ColumnCertificate certify_distance_columns(const ConstacyclicCode& code, std::size_t w,
                                                  u64 budget) {
  return certify_distance_columns(code.tower->quad(), code.check_expanded, w, budget);
}

/// Rows of the parity-check matrix with x -> x^q applied entrywise; they
/// generate the Hermitian dual.
inline Matrix<Fq2> hermitian_dual_generators(const gf::QuadField& f, const Matrix<Fq2>& h) {
  Matrix<Fq2> g = h;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (auto& x : g.row(r)) x = f.frobenius(x);
  return g;
}

struct DualDistance {
  std::size_t distance = 0;
  u64 words = 0;
};

/// Minimum weight of the code generated by the rows of g, by enumerating one
/// representative per line (first nonzero coefficient equal to 1).
inline DualDistance min_weight_exhaustive(const gf::QuadField& f, const Matrix<Fq2>& g,
                                          u64 budget) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (k == 0) throw PreconditionError("code is {0}: minimum distance undefined");
  const u64 size = f.size();
  unsigned __int128 count = 0, power = 1;
  for (std::size_t j = 0; j < k; ++j) {
    count += power;
    power *= size;
    if (count > budget) break;
  }
  if (count > budget) {
    throw BudgetExceeded("exhaustive enumeration needs more than " + std::to_string(budget) +
                         " words (" + std::to_string(k) + " generators over a field of size " +
                         std::to_string(size) + ")");
  }
  // multiples[j][t] = (element t) * g_j
  std::vector<std::vector<std::vector<Fq2>>> multiples(
      k, std::vector<std::vector<Fq2>>(size, std::vector<Fq2>(n)));
  for (std::size_t j = 0; j < k; ++j)
    for (u64 t = 0; t < size; ++t)
      for (std::size_t c = 0; c < n; ++c) multiples[j][t][c] = f.mul(f.from_index(t), g(j, c));

  DualDistance out{n + 1, 0};
  std::vector<Fq2> word(n);
  std::vector<u64> digit(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    for (std::size_t c = 0; c < n; ++c) word[c] = g(lead, c);
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      std::size_t wt = 0;
      for (const auto& x : word) wt += x != f.zero();
      ++out.words;
      if (wt > 0) out.distance = std::min(out.distance, wt);
      std::size_t j = k;
      while (j-- > lead + 1) {
        const u64 old = digit[j];
        const u64 nxt = old + 1 == size ? 0 : old + 1;
        const auto& a = multiples[j][old];
        const auto& b = multiples[j][nxt];
        for (std::size_t c = 0; c < n; ++c) word[c] = f.add(f.sub(word[c], a[c]), b[c]);
        digit[j] = nxt;
        if (nxt != 0) break;
      }
      if (j <= lead) break;
    }
  }
  return out;
}

/// Exact minimum distance of the Hermitian dual by exhaustive enumeration.
inline DualDistance dual_distance_exhaustive(const ConstacyclicCode& code, u64 budget) {
  const auto& f = code.tower->quad();
  if (code.check_expanded.rows() == 0) {
    throw PreconditionError("Hermitian dual of the full space is {0}: distance undefined");
  }
  return min_weight_exhaustive(f, hermitian_dual_generators(f, code.check_expanded), budget);
}

/// c_0 + c_1 X + ... for a word c.
inline Polynomial<Fq2> word_polynomial(const gf::QuadField& f, std::span<const Fq2> word) {
  return poly::trimmed(f, std::vector<Fq2>(word.begin(), word.end()));
}

/// Every generator of the Hermitian dual is a multiple of the generator
/// polynomial, i.e. lies in the code.
inline bool verify_dual_containing_codewords(const ConstacyclicCode& code) {
  const auto& f = code.tower->quad();
  const auto dual = hermitian_dual_generators(f, code.check_expanded);
  for (std::size_t r = 0; r < dual.rows(); ++r) {
    if (!poly::mod(f, word_polynomial(f, dual.row(r)), code.genpoly).is_zero()) return false;
  }
  return true;
}

/// Exact minimum distance for a parity-check matrix with at most two rows:
/// 1 with a zero column, 2 with two proportional columns, otherwise rows + 1.
inline std::size_t minimum_distance_codim_two(const gf::QuadField& f, const Matrix<Fq2>& h) {
  const std::size_t n = h.cols();
  if (h.rows() > 2) throw PreconditionError("minimum_distance_codim_two: more than two rows");
  if (rank(f, h) != h.rows()) throw PreconditionError("parity-check matrix is not full rank");
  if (h.rows() == 0) return 1;
  std::set<std::vector<std::uint32_t>> normalized;
  bool proportional = false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = 0;
    while (p < h.rows() && h(p, c) == f.zero()) ++p;
    if (p == h.rows()) return 1;
    const Fq2 inv = f.inv(h(p, c));
    std::vector<std::uint32_t> key;
    for (std::size_t r = 0; r < h.rows(); ++r) key.push_back(f.mul(h(r, c), inv).v);
    proportional |= !normalized.insert(key).second;
  }
  if (proportional) return 2;
  if (n <= h.rows()) throw PreconditionError("code is {0}: minimum distance undefined");
  return h.rows() + 1;
}

}  // namespace mdsqcc::block

#endif  // MDSQCC_BLOCK_HPP
