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

#include <set>
#include <vector>

#include "mdsqcc/cosets.hpp"
#include "mdsqcc/invariants.hpp"

namespace cosets = mdsqcc::cosets;
using cosets::CosetContext;
using mdsqcc::PreconditionError;

namespace {

// Independent criterion: Z and {-q z mod rn} share no element.
bool disjoint_from_negated_q_image(const cosets::DefiningSet& z) {
  const auto& ctx = z.context;
  std::set<std::uint64_t> image;
  for (auto e : z.exponents) image.insert((ctx.modulus - (ctx.q * e) % ctx.modulus) % ctx.modulus);
  for (auto e : z.exponents)
    if (image.count(e)) return false;
  return true;
}

std::vector<std::uint64_t> family_one_qs() { return {5, 7, 9, 11, 13, 17, 19, 23, 25, 27}; }

}  // namespace

TEST(CosetContext, FamilyOneShape) {
  const auto ctx = CosetContext::family_one(5);
  EXPECT_EQ(ctx.n, 26u);
  EXPECT_EQ(ctx.r, 6u);
  EXPECT_EQ(ctx.modulus, 156u);
  ASSERT_TRUE(ctx.s);
  EXPECT_EQ(*ctx.s, 13u);
  const auto part = cosets::theta_decomposition(ctx);
  EXPECT_EQ(part.singletons().size(), 2u);
  EXPECT_EQ(part.pairs().size(), 12u);
}

TEST(CosetContext, FamilyTwoShape) {
  const auto ctx = CosetContext::family_two(23);
  EXPECT_EQ(ctx.n, 53u);
  EXPECT_EQ(ctx.m, 2u);
  const auto part = cosets::theta_decomposition(ctx);
  EXPECT_EQ(part.singletons().size(), 1u);
  EXPECT_EQ(part.pairs().size(), 26u);
}

TEST(CosetContext, RejectsMalformedInputs) {
  EXPECT_THROW(CosetContext::family_two(7), PreconditionError);
  EXPECT_THROW(CosetContext::family_two(11), PreconditionError);
  EXPECT_THROW(CosetContext::family_one(15), PreconditionError);
  EXPECT_THROW(CosetContext::make(5, 26, 7), PreconditionError);
  EXPECT_THROW(CosetContext::make(5, 10, 6), PreconditionError);
  // m = 1 still has a coset structure even though no code index is in range.
  EXPECT_NO_THROW(cosets::theta_decomposition(CosetContext::family_two(13)));
}

TEST(CosetContext, SecondFamilyOneSingleton) {
  for (auto q : family_one_qs()) {
    const auto ctx = CosetContext::family_one(q);
    const auto z = (1 + ctx.r * ((q - 1) / 2 + (q * q + 1) / 2)) % ctx.modulus;
    EXPECT_EQ(cosets::cyclotomic_coset(z, ctx).size(), 1u) << q;
    EXPECT_TRUE(ctx.in_theta(z));
  }
}

TEST(DefiningSets, SizesFollowTheProgression) {
  for (auto q : family_one_qs()) {
    const auto ctx = CosetContext::family_one(q);
    for (std::uint64_t d = 0; d <= (q - 1) / 2; ++d) {
      const auto z = cosets::defining_set_family_I(ctx, d);
      EXPECT_EQ(z.size(), 2 * d + 1) << "q=" << q << " delta=" << d;
      EXPECT_TRUE(z.is_closed());
    }
    EXPECT_THROW(cosets::defining_set_family_I(ctx, (q + 1) / 2), PreconditionError);
  }
  for (std::uint64_t q : {23u, 27u, 37u, 43u, 47u}) {
    const auto ctx = CosetContext::family_two(q);
    for (std::uint64_t t = 0; t + 2 <= (ctx.n - 1) / 2; ++t) {
      const auto z = cosets::defining_set_family_II(ctx, t);
      EXPECT_EQ(z.size(), 2 * t + 2) << "q=" << q << " t=" << t;
      EXPECT_TRUE(z.is_closed());
    }
  }
}

TEST(DefiningSets, RepeatedCosetIsRejected) {
  const auto ctx = CosetContext::family_one(5);
  const std::vector<cosets::Residue> reps{13, 13};
  EXPECT_THROW(cosets::defining_set_from_representatives(ctx, reps), PreconditionError);
  const std::vector<cosets::Residue> outside{2};
  EXPECT_THROW(cosets::defining_set_from_representatives(ctx, outside), PreconditionError);
}

TEST(DualContainment, InRangeDefiningSetsAreDualContaining) {
  for (auto q : family_one_qs()) {
    const auto ctx = CosetContext::family_one(q);
    for (std::uint64_t d = 0; d <= (q - 1) / 2; ++d) {
      const auto z = cosets::defining_set_family_I(ctx, d);
      EXPECT_TRUE(cosets::is_dual_containing(z)) << "q=" << q << " delta=" << d;
      EXPECT_TRUE(disjoint_from_negated_q_image(z));
    }
  }
  for (std::uint64_t q : {23u, 27u, 37u}) {
    const auto ctx = CosetContext::family_two(q);
    for (std::uint64_t t = 0; t <= 2 * ctx.m - 1; ++t) {
      const auto z = cosets::defining_set_family_II(ctx, t);
      EXPECT_TRUE(cosets::is_dual_containing(z)) << "q=" << q << " t=" << t;
    }
  }
}

TEST(DualContainment, CriterionMatchesIndependentCheckOnAllCosetPairs) {
  const auto ctx = CosetContext::family_one(7);
  const auto part = cosets::theta_decomposition(ctx);
  std::size_t positives = 0, negatives = 0;
  for (std::size_t a = 0; a < part.cosets.size(); ++a)
    for (std::size_t b = a + 1; b < part.cosets.size(); ++b) {
      const std::vector<cosets::Residue> reps{part.cosets[a].representative,
                                              part.cosets[b].representative};
      const auto z = cosets::defining_set_from_representatives(ctx, reps);
      const bool expected = disjoint_from_negated_q_image(z);
      EXPECT_EQ(cosets::is_dual_containing(z), expected);
      (expected ? positives : negatives)++;
    }
  EXPECT_GT(positives, 0u);
  EXPECT_GT(negatives, 0u);
  EXPECT_FALSE(cosets::is_dual_containing(cosets::whole_theta(ctx)));
}

TEST(CosetProperties, RandomThetaElements) {
  for (auto q : family_one_qs()) {
    const auto r = mdsqcc::invariants::coset_partition(CosetContext::family_one(q));
    EXPECT_EQ(r.status, mdsqcc::quantum::CheckStatus::Pass) << r.name << ": " << r.detail;
  }
  for (std::uint64_t q : {13u, 17u, 23u, 27u, 37u}) {
    const auto r = mdsqcc::invariants::coset_partition(CosetContext::family_two(q));
    EXPECT_EQ(r.status, mdsqcc::quantum::CheckStatus::Pass) << r.name << ": " << r.detail;
  }
}
