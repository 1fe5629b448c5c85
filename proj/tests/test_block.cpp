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

#include <gtest/gtest.h>

#include <memory>
#include <random>
#include <vector>

#include "mdsqcc/block.hpp"
#include "mdsqcc/cosets.hpp"

namespace block = mdsqcc::block;
namespace cosets = mdsqcc::cosets;
namespace gf = mdsqcc::gf;
namespace poly = mdsqcc::poly;
using mdsqcc::BudgetExceeded;
using mdsqcc::PreconditionError;
using gf::Fq2;

namespace {

std::shared_ptr<const gf::FieldTower> tower_of(std::uint64_t p, std::uint64_t e = 1) {
  return std::make_shared<const gf::FieldTower>(p, e);
}

block::ConstacyclicCode family_one_code(std::uint64_t q, std::uint64_t delta,
                                        std::shared_ptr<const gf::FieldTower> tower) {
  const auto ctx = cosets::CosetContext::family_one(q);
  return block::build_code(std::move(tower), cosets::defining_set_family_I(ctx, delta));
}

// Codeword m(X) g(X) with deg m < k, as a length-n vector.
std::vector<Fq2> codeword(const gf::QuadField& f, const block::ConstacyclicCode& code,
                          const std::vector<Fq2>& message) {
  const auto c = poly::mul(f, poly::trimmed(f, message), code.genpoly);
  std::vector<Fq2> out(code.length(), f.zero());
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) out[j] = c.coeffs[j];
  return out;
}

}  // namespace

TEST(BuildCode, GeneratorPolynomialDividesModulus) {
  const auto tower = tower_of(5);
  const auto code = family_one_code(5, 2, tower);
  const auto& f = tower->quad();
  EXPECT_EQ(code.length(), 26u);
  EXPECT_EQ(code.dimension(), 21u);
  EXPECT_EQ(code.genpoly.degree(), 5);
  EXPECT_EQ(gf::element_order(f, code.lambda), 6u);
  const auto modulus = block::constacyclic_modulus(f, 26, code.lambda);
  EXPECT_TRUE(poly::mod(f, modulus, code.genpoly).is_zero());
  // Every root beta^z, z in Z, is a root of g over F_{q^4}.
  const auto& f4 = tower->quart();
  for (auto z : code.zset.exponents) {
    auto x = f4.pow(code.beta, z);
    auto acc = f4.zero();
    for (std::size_t k = code.genpoly.coeffs.size(); k-- > 0;)
      acc = f4.add(f4.mul(acc, x), tower->embed(code.genpoly.coeffs[k]));
    EXPECT_EQ(acc, f4.zero()) << z;
  }
}

TEST(BuildCode, ParityCheckAnnihilatesRandomCodewords) {
  const auto tower = tower_of(7);
  const auto code = family_one_code(7, 3, tower);
  const auto& f = tower->quad();
  const auto& f4 = tower->quart();
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<Fq2> msg(code.dimension());
    for (auto& x : msg) x = gf::random_element(f, rng);
    const auto c = codeword(f, code, msg);
    for (std::size_t r = 0; r < code.check_expanded.rows(); ++r) {
      auto acc = f.zero();
      for (std::size_t j = 0; j < c.size(); ++j) acc = f.add(acc, f.mul(code.check_expanded(r, j), c[j]));
      EXPECT_EQ(acc, f.zero());
    }
    for (std::size_t r = 0; r < code.check_raw.rows(); ++r) {
      auto acc = f4.zero();
      for (std::size_t j = 0; j < c.size(); ++j)
        acc = f4.add(acc, f4.mul(code.check_raw(r, j), tower->embed(c[j])));
      EXPECT_EQ(acc, f4.zero());
    }
  }
}

TEST(BuildCode, CosetRowsAndRank) {
  const auto tower = tower_of(5);
  const auto code = family_one_code(5, 2, tower);
  EXPECT_EQ(code.check_expanded.rows(), 5u);
  ASSERT_EQ(code.rows_per_coset.size(), code.zset.cosets.size());
  for (std::size_t c = 0; c < code.zset.cosets.size(); ++c)
    EXPECT_EQ(code.rows_per_coset[c], code.zset.cosets[c].members.size());
  EXPECT_EQ(mdsqcc::rank(tower->quad(), code.check_expanded), 5u);
}

TEST(BuildCode, TowerMismatchIsRejected) {
  const auto ctx = cosets::CosetContext::family_one(5);
  EXPECT_THROW(block::build_code(tower_of(7), cosets::defining_set_family_I(ctx, 1)),
               PreconditionError);
}

TEST(Distance, BchBoundPinsMds) {
  const auto tower = tower_of(7);
  for (std::uint64_t d = 0; d <= 3; ++d) {
    const auto code = family_one_code(7, d, tower);
    const auto iv = block::distance_interval(code);
    EXPECT_EQ(iv.lower, 2 * d + 2);
    EXPECT_EQ(iv.upper, 2 * d + 2);
    EXPECT_TRUE(iv.exact());
  }
}

TEST(Distance, BruteForceOverAllCodewordsOfSmallCode) {
  // [10, 7] over F_9: enumerate all 9^7 messages.
  const auto tower = tower_of(3);
  const auto code = family_one_code(3, 1, tower);
  const auto& f = tower->quad();
  ASSERT_EQ(code.dimension(), 7u);
  std::vector<std::uint64_t> digits(7, 0);
  std::size_t best = code.length() + 1;
  while (true) {
    std::size_t j = 0;
    while (j < digits.size() && ++digits[j] == f.size()) digits[j++] = 0;
    if (j == digits.size()) break;
    std::vector<Fq2> msg;
    for (auto d : digits) msg.push_back(f.from_index(d));
    std::size_t wt = 0;
    for (const auto& x : codeword(f, code, msg)) wt += x != f.zero();
    best = std::min(best, wt);
  }
  EXPECT_EQ(best, 4u);
  EXPECT_EQ(block::distance_interval(code).lower, 4u);
  EXPECT_TRUE(block::certify_distance_columns(code, 3, 1'000'000).passed);
  EXPECT_FALSE(block::certify_distance_columns(code, 4, 1'000'000).passed);
}

TEST(ColumnOracle, FiveColumnsIndependentSixDependent) {
  const auto tower = tower_of(5);
  const auto code = family_one_code(5, 2, tower);
  const auto five = block::certify_distance_columns(code, 5, 100'000);
  EXPECT_TRUE(five.passed);
  EXPECT_EQ(five.subsets, 65780u);
  const auto six = block::certify_distance_columns(code, 6, 1'000'000);
  EXPECT_FALSE(six.passed);
  EXPECT_EQ(six.witness.size(), 6u);
}

TEST(ColumnOracle, WitnessIsLexicographicallyFirst) {
  // Columns 0 and 2 are equal, so {0, 2} is the first dependent pair.
  const auto tower = tower_of(5);
  const auto& f = tower->quad();
  mdsqcc::Matrix<Fq2> h(0, 4);
  const std::vector<Fq2> r0{f.one(), f.from_index(2), f.one(), f.from_index(3)};
  const std::vector<Fq2> r1{f.from_index(7), f.one(), f.from_index(7), f.zero()};
  h.append_row(r0);
  h.append_row(r1);
  const auto res = block::certify_distance_columns(f, h, 2, 100);
  EXPECT_FALSE(res.passed);
  EXPECT_EQ(res.witness, (std::vector<std::size_t>{0, 2}));
}

TEST(ColumnOracle, BudgetIsEnforcedBeforeWork) {
  const auto tower = tower_of(5);
  const auto code = family_one_code(5, 2, tower);
  EXPECT_THROW(block::certify_distance_columns(code, 5, 1000), BudgetExceeded);
}

TEST(DualDistance, ExhaustiveMatchesMdsDual) {
  const auto tower = tower_of(5);
  for (std::uint64_t d : {1u, 2u}) {
    const auto code = family_one_code(5, d, tower);
    const auto res = block::dual_distance_exhaustive(code, 10'000'000);
    EXPECT_EQ(res.distance, code.length() - code.codimension() + 1);
  }
  EXPECT_THROW(block::dual_distance_exhaustive(family_one_code(5, 2, tower), 10), BudgetExceeded);
}

TEST(DualContainment, CodewordRouteAgreesWithCriterion) {
  const auto tower = tower_of(5);
  const auto ctx = cosets::CosetContext::family_one(5);
  const auto part = cosets::theta_decomposition(ctx);
  std::size_t negatives = 0;
  for (std::size_t a = 0; a < part.cosets.size(); ++a)
    for (std::size_t b = a + 1; b < part.cosets.size(); ++b) {
      const std::vector<cosets::Residue> reps{part.cosets[a].representative,
                                              part.cosets[b].representative};
      const auto z = cosets::defining_set_from_representatives(ctx, reps);
      const auto code = block::build_code(tower, z);
      const bool crit = cosets::is_dual_containing(z);
      EXPECT_EQ(block::verify_dual_containing_codewords(code), crit);
      negatives += !crit;
    }
  EXPECT_GT(negatives, 0u);
}

TEST(CodimTwo, ExactDistanceMatchesBruteForce) {
  const auto tower = tower_of(5);
  const auto& f = tower->quad();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + t % 4;
    mdsqcc::Matrix<Fq2> h(0, n);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int r = 0; r < 2; ++r) {
      std::vector<Fq2> row(n);
      for (auto& x : row) x = pick(rng) == 0 ? f.zero() : f.from_index(pick(rng) % 3 + 1);
      h.append_row(row);
    }
    if (mdsqcc::rank(f, h) != 2) continue;
    // Brute force: smallest w with w dependent columns, w <= 3.
    std::size_t expected = 3;
    for (std::size_t w = 1; w <= 2 && expected == 3; ++w)
      if (!block::certify_distance_columns(f, h, w, 1000).passed) expected = w;
    EXPECT_EQ(block::minimum_distance_codim_two(f, h), expected);
  }
}
