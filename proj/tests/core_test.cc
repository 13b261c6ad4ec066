// Copyright 2026 The molp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "gtest/gtest.h"
#include "molp/errors.h"
#include "molp/explicit_problem.h"
#include "molp/objective.h"
#include "molp/rational.h"
#include "molp/schedule.h"
#include "test_support.h"

namespace molp {
namespace {

using molp_test::Q;
using molp_test::Vec;

TEST(RationalTest, CanonicalForm) {
  const Rational r = Q("-6/4");
  EXPECT_EQ(r.ToString(), "-3/2");
  EXPECT_EQ(Q("2/4"), Rational(1, 2));
  EXPECT_EQ(Q("10/5").ToString(), "2");
  EXPECT_EQ(r.denominator(), 2);
}

TEST(RationalTest, ParseRejectsMalformedText) {
  EXPECT_THROW(Rational::Parse("1/0"), ParseError);
  EXPECT_THROW(Rational::Parse("abc"), ParseError);
  EXPECT_THROW(Rational::Parse(""), ParseError);
  EXPECT_THROW(Rational::Parse("1.5"), ParseError);
}

TEST(RationalTest, ArithmeticAndOrder) {
  EXPECT_EQ(Q("1/3") + Q("1/6"), Q("1/2"));
  EXPECT_EQ(Q("11/10").Pow(4), Q("14641/10000"));
  EXPECT_EQ(Q("2/3").Pow(-2), Q("9/4"));
  EXPECT_EQ(Rational::TwoPow(-3), Q("1/8"));
  EXPECT_EQ(Q("7/2").Floor(), 3);
  EXPECT_EQ(Q("7/2").Ceil(), 4);
  EXPECT_EQ(Q("-7/2").Floor(), -4);
  EXPECT_LT(Q("1/3"), Q("34/100"));
}

TEST(RationalTest, TextRoundTrip) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const Rational r(static_cast<int64_t>(rng() % 2001) - 1000,
                     static_cast<int64_t>(rng() % 999) + 1);
    EXPECT_EQ(Rational::Parse(r.ToString()), r);
  }
}

TEST(DominanceTest, Examples) {
  EXPECT_TRUE(Dominates(Vec({1, 2}), Vec({1, 3})));
  EXPECT_FALSE(Dominates(Vec({1, 2}), Vec({1, 2})));
  EXPECT_FALSE(Dominates(Vec({2, 1}), Vec({1, 2})));
  EXPECT_THROW(Dominates(Vec({1, 2}), Vec({1, 2, 3})), ContractViolation);
}

TEST(DominanceTest, AlphaExamples) {
  EXPECT_TRUE(AlphaDominates(Vec({2, 3}), Vec({2, 2}),
                             ApproxFactor({1, Q("3/2")})));
  EXPECT_FALSE(AlphaDominates(Vec({2, 3}), Vec({2, 2}),
                              ApproxFactor({1, Q("5/4")})));
  const ObjectiveVector a = Vec({Q("7/3"), 5, 1});
  EXPECT_TRUE(AlphaDominates(a, a, ApproxFactor::Exact(3)));
  EXPECT_THROW(AlphaDominates(Vec({1, 2}), Vec({1, 2}), ApproxFactor::Exact(3)),
               ContractViolation);
}

TEST(DominanceTest, VectorsMustBePositive) {
  EXPECT_THROW(Vec({0, 1}), ContractViolation);
  EXPECT_THROW(Vec({1}), ContractViolation);
  EXPECT_THROW(ApproxFactor({1, Q("1/2")}), InvalidParameter);
}

TEST(DominanceTest, OneExactAlpha) {
  const ApproxFactor a = OneExactAlpha(1, 2);
  EXPECT_EQ(a[0], 1);
  EXPECT_EQ(a[1], 2);
  const ApproxFactor b = OneExactAlpha(Q("1/2"), 3);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[1], Q("3/2"));
  EXPECT_EQ(b[2], Q("3/2"));
  EXPECT_THROW(OneExactAlpha(0, 2), InvalidParameter);
}

// Strict partial order, and the link between the two relations.
TEST(DominanceTest, RandomTriples) {
  std::mt19937_64 rng(11);
  auto random_vector = [&] {
    return Vec({Rational(static_cast<int64_t>(rng() % 4) + 1),
                Rational(static_cast<int64_t>(rng() % 4) + 1),
                Rational(static_cast<int64_t>(rng() % 4) + 1)});
  };
  const ApproxFactor loose = ApproxFactor::Uniform(3, Q("3/2"));
  for (int k = 0; k < 2000; ++k) {
    const ObjectiveVector a = random_vector();
    const ObjectiveVector b = random_vector();
    const ObjectiveVector c = random_vector();
    EXPECT_FALSE(Dominates(a, a));
    if (Dominates(a, b) && Dominates(b, c)) EXPECT_TRUE(Dominates(a, c));
    if (Dominates(a, b)) EXPECT_FALSE(Dominates(b, a));
    const bool weak = AlphaDominates(a, b, ApproxFactor::Exact(3));
    EXPECT_EQ(Dominates(a, b), weak && a != b);
    if (Dominates(a, b)) EXPECT_TRUE(AlphaDominates(a, b, loose));
  }
}

TEST(DeriveDeltaTest, ExactFourthPower) {
  const EpsilonSchedule s = DeriveDelta(Q("4641/10000"), 4, 10);
  EXPECT_EQ(s.delta, Q("1/10"));
  EXPECT_EQ(s.effective_epsilon, Q("4641/10000"));
  EXPECT_EQ(s.root_order, 4);
}

TEST(DeriveDeltaTest, ExactSquareWithUnitCap) {
  EXPECT_EQ(DeriveDelta(3, 2, 1).delta, 1);
}

// The maximum over every fraction a/b with b <= 100, by direct scan.
TEST(DeriveDeltaTest, MatchesExhaustiveScan) {
  Rational best(0);
  for (int64_t b = 1; b <= 100; ++b) {
    for (int64_t a = 1; a <= b; ++a) {
      const Rational q(a, b);
      if ((Rational(1) + q).Pow(2) <= 2 && q > best) best = q;
    }
  }
  const Rational delta = DeriveDelta(1, 2, 100).delta;
  EXPECT_EQ(delta, best);
  EXPECT_LE((Rational(1) + delta).Pow(2), 2);
  EXPECT_GT((Rational(1) + delta + Q("1/100")).Pow(2), 2);
}

TEST(DeriveDeltaTest, RandomEpsilonsStayBelowTarget) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 300; ++k) {
    const Rational eps(static_cast<int64_t>(rng() % 400) + 1,
                       static_cast<int64_t>(rng() % 97) + 3);
    const int order = 2 + static_cast<int>(rng() % 3);
    const int64_t cap = 2 + static_cast<int64_t>(rng() % 500);
    EpsilonSchedule s;
    try {
      s = DeriveDelta(eps, order, cap);
    } catch (const InvalidParameter&) {
      // Only legitimate when not even 1/cap fits.
      EXPECT_GT((Rational(1) + Rational(1, cap)).Pow(order), Rational(1) + eps);
      continue;
    }
    EXPECT_GT(s.delta, 0);
    EXPECT_LT(s.delta, eps);
    EXPECT_LE(s.delta.denominator(), cap);
    EXPECT_LE((Rational(1) + s.delta).Pow(order), Rational(1) + eps);
    EXPECT_EQ(s.effective_epsilon, (Rational(1) + s.delta).Pow(order) - 1);
    // No fraction with the same denominator bound fits between delta and the
    // next candidate with denominator cap.
    for (int64_t b = 1; b <= std::min<int64_t>(cap, 40); ++b) {
      const Rational above =
          Rational(BigInt((s.delta * Rational(b)).Floor() + 1), BigInt(b));
      EXPECT_GT((Rational(1) + above).Pow(order), Rational(1) + eps);
    }
  }
}

TEST(DeriveDeltaTest, RejectsBadArguments) {
  EXPECT_THROW(DeriveDelta(0, 2), InvalidParameter);
  EXPECT_THROW(DeriveDelta(1, 5), InvalidParameter);
  EXPECT_THROW(DeriveDelta(Q("1/1000"), 2, 10), InvalidParameter);
}

TEST(PowerTableTest, NegativeAndPositiveExponents) {
  const PowerTable t(Q("3/2"), -2, 3);
  EXPECT_EQ(t(-2), Q("4/9"));
  EXPECT_EQ(t(0), 1);
  EXPECT_EQ(t(3), Q("27/8"));
  EXPECT_EQ(SmallestExponentReaching(Q("11/10"), 16), 30);
}

// Range and separation checks of the explicit listing, by enumeration.
TEST(BoundExponentTest, ExplicitListingValidation) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    const ExplicitInstance inst = molp_test::RandomListing(
        rng, 2 + k % 2, 1 + k % 9, molp_test::FuzzStyle::kGrid, 1 + k % 3);
    const int m = inst.bound_exponent();
    const Rational lo = Rational::TwoPow(-m);
    const Rational hi = Rational::TwoPow(m);
    const Rational gap = Rational::TwoPow(-2 * m);
    for (const auto& a : inst.points()) {
      for (std::size_t j = 0; j < a.image.size(); ++j) {
        EXPECT_GE(a.image[j], lo);
        EXPECT_LE(a.image[j], hi);
        for (const auto& b : inst.points()) {
          if (a.image[j] != b.image[j]) {
            const Rational diff =
                a.image[j] > b.image[j] ? a.image[j] - b.image[j]
                                        : b.image[j] - a.image[j];
            EXPECT_GE(diff, gap);
          }
        }
      }
    }
  }
}

TEST(BoundExponentTest, DeclaredExponentIsChecked) {
  std::vector<EvaluatedSolution> pts = {
      molp_test::Pt("a", {1, 1}), molp_test::Pt("b", {Q("17/16"), 2})};
  // Gap 1/16 needs 2^-2M <= 1/16, so M = 1 is too small.
  EXPECT_THROW(ExplicitInstance(2, pts, 1), ValidationError);
  EXPECT_NO_THROW(ExplicitInstance(2, pts, 2));
  EXPECT_EQ(ExplicitInstance(2, pts).bound_exponent(), 2);
}

}  // namespace
}  // namespace molp
