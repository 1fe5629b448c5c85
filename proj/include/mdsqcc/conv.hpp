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
 * Polynomial generator matrices G(D) over F_{q^2}[D], built by the two-block
 * split G(D) = N0 + N1 D, with the structural checks on the code they generate.
 */

#ifndef MDSQCC_CONV_HPP
#define MDSQCC_CONV_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace mdsqcc::conv {

using gf::Fq2;
using Entry = Polynomial<Fq2>;

/// kappa x n matrix of polynomials in D; row_degrees[i] is the largest entry
/// degree in row i (0 for a zero row).
struct PolyGenerator {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Entry> entries;  // row-major
  std::vector<int> row_degrees;
  int memory = 0;
  int degree = 0;

  const Entry& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  static PolyGenerator from_entries(std::size_t rows, std::size_t cols,
                                    std::vector<Entry> entries) {
    if (entries.size() != rows * cols) {
      throw PreconditionError("PolyGenerator: entry count does not match the shape");
    }
    PolyGenerator g{rows, cols, std::move(entries), {}, 0, 0};
    g.row_degrees = g.computed_row_degrees();
    g.memory = g.row_degrees.empty() ? 0 : *std::max_element(g.row_degrees.begin(), g.row_degrees.end());
    g.degree = std::accumulate(g.row_degrees.begin(), g.row_degrees.end(), 0);
    return g;
  }

  std::vector<int> computed_row_degrees() const {
    std::vector<int> out(rows, 0);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out[r] = std::max(out[r], at(r, c).degree());
    return out;
  }

  /// Stored degrees agree with the entries.
  bool degrees_consistent() const {
    const auto d = computed_row_degrees();
    const int mu = d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    return d == row_degrees && mu == memory &&
           std::accumulate(d.begin(), d.end(), 0) == degree;
  }
};

/// G(D) = N0 + N1' D where N1' is N1 padded with zero rows at the bottom to
/// the row count of N0. N0 must have full row rank and N1 must be nonzero.
inline PolyGenerator split_and_build(const gf::QuadField& f, const Matrix<Fq2>& n0,
                                     const Matrix<Fq2>& n1) {
  if (n0.cols() != n1.cols()) {
    throw PreconditionError("split_and_build: blocks have different column counts");
  }
  if (n1.rows() > n0.rows()) {
    throw PreconditionError("split_and_build: the D-block has more rows than the constant block");
  }
  if (rank(f, n0) != n0.rows()) {
    throw PreconditionError("split_and_build: constant block is not of full row rank");
  }
  if (rank(f, n1) == 0) {
    throw PreconditionError("split_and_build: D-block is zero (memory would be 0)");
  }
  std::vector<Entry> entries;
  entries.reserve(n0.rows() * n0.cols());
  for (std::size_t r = 0; r < n0.rows(); ++r) {
    for (std::size_t c = 0; c < n0.cols(); ++c) {
      const Fq2 d1 = r < n1.rows() ? n1(r, c) : f.zero();
      entries.push_back(poly::trimmed(f, {n0(r, c), d1}));
    }
  }
  return PolyGenerator::from_entries(n0.rows(), n0.cols(), std::move(entries));
}

/// Monic gcd of all maximal minors of G, computed by unimodular column
/// reduction to lower-triangular form [L | 0]; the gcd is det L up to a unit.
/// Zero when G is rank deficient.
inline Entry maximal_minor_gcd(const gf::QuadField& f, const PolyGenerator& g) {
  const std::size_t k = g.rows;
  const std::size_t n = g.cols;
  if (k == 0) return poly::constant(f, f.one());
  if (k > n) return {};
  std::vector<std::vector<Entry>> col(n, std::vector<Entry>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) col[c][r] = g.at(r, c);

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.row_degrees[a] < g.row_degrees[b];
  });

  Entry det = poly::constant(f, f.one());
  std::size_t pc = 0;
  for (std::size_t step = 0; step < k; ++step, ++pc) {
    const std::size_t r = order[step];
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t c = pc; c < n; ++c) {
        if (col[c][r].is_zero()) continue;
        if (!best || col[c][r].degree() < col[*best][r].degree()) best = c;
      }
      if (!best) return {};
      std::swap(col[*best], col[pc]);
      bool clean = true;
      for (std::size_t c = pc + 1; c < n; ++c) {
        if (col[c][r].is_zero()) continue;
        const auto [quo, rem] = poly::divmod(f, col[c][r], col[pc][r]);
        for (std::size_t s = step; s < k; ++s) {
          const std::size_t rr = order[s];
          if (col[pc][rr].is_zero()) continue;
          col[c][rr] = poly::sub(f, col[c][rr], poly::mul(f, quo, col[pc][rr]));
        }
        clean &= rem.is_zero();
      }
      if (clean) break;
    }
    det = poly::mul(f, det, col[pc][r]);
  }
  return poly::monic(f, det);
}

/// Basic: the maximal minors have a nonzero constant gcd.
inline bool is_basic(const gf::QuadField& f, const PolyGenerator& g) {
  return maximal_minor_gcd(f, g).degree() == 0;
}

/// Row i holds the coefficients of D^{row_degrees[i]} of its entries.
inline Matrix<Fq2> leading_coefficient_matrix(const PolyGenerator& g) {
  Matrix<Fq2> lead(g.rows, g.cols);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c)
      lead(r, c) = g.at(r, c).coeff(static_cast<std::size_t>(g.row_degrees[r]));
  return lead;
}

/// Reduced: the leading-coefficient matrix has full row rank.
inline bool is_reduced(const gf::QuadField& f, const PolyGenerator& g) {
  return rank(f, leading_coefficient_matrix(g)) == g.rows;
}

/// Coefficients of sum_j g_aj(D) * conj(g_bj)(1/D), indexed from D^{-memory}
/// to D^{memory}; conj applies x -> x^q to each coefficient.
inline std::vector<Fq2> hermitian_laurent_product(const gf::QuadField& f,
                                                  const PolyGenerator& g, std::size_t a,
                                                  std::size_t b) {
  const int mu = g.memory;
  std::vector<Fq2> acc(static_cast<std::size_t>(2 * mu + 1), f.zero());
  for (std::size_t c = 0; c < g.cols; ++c) {
    const auto& u = g.at(a, c).coeffs;
    const auto& v = g.at(b, c).coeffs;
    for (std::size_t s = 0; s < u.size(); ++s) {
      if (u[s] == f.zero()) continue;
      for (std::size_t t = 0; t < v.size(); ++t) {
        const auto idx = static_cast<std::size_t>(static_cast<int>(s) - static_cast<int>(t) + mu);
        acc[idx] = f.add(acc[idx], f.mul(u[s], f.frobenius(v[t])));
      }
    }
  }
  return acc;
}

/// Every ordered pair of rows has an identically zero Hermitian Laurent
/// product, i.e. all time shifts of all rows are mutually orthogonal.
inline bool hermitian_self_orthogonal(const gf::QuadField& f, const PolyGenerator& g) {
  for (std::size_t a = 0; a < g.rows; ++a) {
    for (std::size_t b = 0; b < g.rows; ++b) {
      for (const Fq2& x : hermitian_laurent_product(f, g, a, b)) {
        if (x != f.zero()) return false;
      }
    }
  }
  return true;
}

/// Free-distance bounds from the block distances: the Hermitian dual of the
/// convolutional code has min(d0 + dmu, d) <= d_f^perp <= d, and the code
/// itself has d_f >= d_dual.
struct FreeDistanceSandwich {
  std::size_t lower_perp = 0;
  std::size_t upper_perp = 0;
  std::size_t lower_v = 0;
  bool pinned() const { return lower_perp == upper_perp; }
};

inline FreeDistanceSandwich free_distance_sandwich(std::size_t d0, std::size_t dmu,
                                                   std::size_t d, std::size_t d_dual) {
  return {std::min(d0 + dmu, d), d, d_dual};
}

/// (n, k, degree; memory, d_f) with d_f known only through the sandwich.
struct ConvCode {
  PolyGenerator generator;
  std::size_t length = 0;
  std::size_t dimension = 0;
  int degree = 0;
  int memory = 0;
  FreeDistanceSandwich bounds;
};

inline ConvCode make_conv_code(PolyGenerator g, FreeDistanceSandwich bounds) {
  ConvCode c;
  c.length = g.cols;
  c.dimension = g.rows;
  c.degree = g.degree;
  c.memory = g.memory;
  c.bounds = bounds;
  c.generator = std::move(g);
  return c;
}

}  // namespace mdsqcc::conv

#endif  // MDSQCC_CONV_HPP
