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

#include "molp/generators.h"

#include <vector>

#include "gtest/gtest.h"
#include "molp/algorithms.h"
#include "molp/errors.h"
#include "molp/scheduling_problem.h"
#include "test_support.h"

namespace molp {
namespace {

using molp_test::Q;
using molp_test::SubsetMinOneExact;
using molp_test::Vec;

std::vector<ObjectiveVector> Images(const ExplicitInstance& inst) {
  std::vector<ObjectiveVector> out;
  for (const auto& s : inst.points()) out.push_back(s.image);
  return out;
}

TEST(ChainTest, Examples) {
  EXPECT_EQ(Images(GenerateChain(1, 2)),
            (std::vector<ObjectiveVector>{Vec({2, 1}), Vec({Q("3/2"), 4}),
                                          Vec({1, 16})}));
  EXPECT_EQ(Images(GenerateChain(1, 1)),
            (std::vector<ObjectiveVector>{Vec({2, 1}), Vec({1, 4})}));
  EXPECT_THROW(GenerateChain(0, 2), InvalidParameter);
  EXPECT_THROW(GenerateChain(1, 0), InvalidParameter);
}

TEST(ChainTest, PairwiseNotOneExactAndFirstPointCoversAll) {
  for (const Rational& eps : {Q("1/3"), Rational(1), Q("5/2")}) {
    for (int n = 1; n <= 6; ++n) {
      const ExplicitInstance inst = GenerateChain(eps, n);
      const auto& pts = inst.points();
      for (const auto& a : pts) {
        for (const auto& b : pts) {
          if (a.token == b.token) continue;
          EXPECT_FALSE(AlphaDominates(a.image, b.image, OneExactAlpha(eps, 2)));
        }
        EXPECT_TRUE(molp_test::UniformCovers(pts[0].image, a.image,
                                             Rational(1) + eps));
      }
      EXPECT_EQ(GreedyMinAlgorithm(ExplicitProblem(inst), eps).set.size(),
                static_cast<std::size_t>(n + 1));
    }
  }
}

TEST(HiddenPointTest, Examples) {
  const ExplicitInstance two = GenerateHiddenPoint(1, 10, 8, false);
  EXPECT_EQ(Images(two),
            (std::vector<ObjectiveVector>{Vec({9, 16}), Vec({10, 8})}));
  EXPECT_TRUE(molp_test::IsOneExact(std::span(two.points()).first(1),
                                    two.points(), 1));
  const ExplicitInstance three = GenerateHiddenPoint(1, 10, 8, true);
  EXPECT_EQ(three.points()[2].image, Vec({10, 7}));
  EXPECT_GE(SubsetMinOneExact(three.points(), 1), 2u);
  EXPECT_THROW(GenerateHiddenPoint(1, 1, 8, false), InvalidParameter);
}

// The two instances differ only below the second value; an algorithm that
// queries with a small enough delta tells them apart.
TEST(HiddenPointTest, AdaptiveRunsSeparateTheInstances) {
  const auto two = AdaptiveAlgorithm(
      ExplicitProblem(GenerateHiddenPoint(1, 10, 8, false)), 1);
  const auto three = AdaptiveAlgorithm(
      ExplicitProblem(GenerateHiddenPoint(1, 10, 8, true)), 1);
  ASSERT_EQ(two.set.size(), 2u);
  ASSERT_EQ(three.set.size(), 2u);
  EXPECT_EQ(two.set[1].token, "x2");
  EXPECT_EQ(three.set[1].token, "x3");
  EXPECT_NE(two.audit.Export(), three.audit.Export());
  for (const AuditRecord& r : three.audit.records()) {
    ASSERT_TRUE(r.delta.has_value());
    EXPECT_EQ(*r.delta, three.schedule->delta);
  }
}

TEST(PartitionScheduleTest, KFromFormula) {
  const int64_t a[] = {1, 1, 2};
  const PartitionSchedule yes = GeneratePartitionSchedule(a, Q("1/4"));
  EXPECT_EQ(yes.k, 5);
  EXPECT_TRUE(PartitionKValid(yes.k, 4, Q("1/4")));
  const int64_t b[] = {1, 1, 3};
  EXPECT_EQ(GeneratePartitionSchedule(b, Q("1/4")).k, 7);
  const auto& jobs = yes.instance.jobs();
  ASSERT_EQ(jobs.size(), 5u);
  EXPECT_EQ(jobs[2].time, (std::vector<Rational>{2, 2}));
  EXPECT_EQ(jobs[2].cost, (std::vector<Rational>{2, 0}));
  EXPECT_EQ(jobs[3].cost, (std::vector<Rational>{1, 2}));
  EXPECT_EQ(jobs[4].cost, (std::vector<Rational>{2, 1}));
  EXPECT_EQ(jobs[4].time, (std::vector<Rational>{5, 5}));
}

// The three conditions on K, checked from their definitions for every
// candidate K: exactly the emitted one is the largest that passes.
TEST(PartitionScheduleTest, EmittedKMeetsConditions) {
  for (int64_t sum = 1; sum <= 30; ++sum) {
    for (const Rational& eps : {Q("1/10"), Q("1/4"), Q("1/3"), Q("2/5")}) {
      const Rational a(sum);
      int64_t largest = 0;
      for (int64_t k = 1; k < 400; ++k) {
        const Rational big(k);
        const Rational scaled = (big + a) / (Rational(1) + eps);
        const bool ok = scaled > big + a / 2 &&
                        scaled <= big + a / 2 + 1 && scaled <= 2 * big;
        EXPECT_EQ(PartitionKValid(k, sum, eps), ok);
        if (ok) largest = k;
      }
      const std::vector<int64_t> values = {sum};
      if (largest == 0) {
        EXPECT_THROW(GeneratePartitionSchedule(values, eps), InvalidParameter);
        continue;
      }
      try {
        const int64_t k = GeneratePartitionSchedule(values, eps).k;
        EXPECT_TRUE(PartitionKValid(k, sum, eps));
      } catch (const InvalidParameter&) {
        ADD_FAILURE() << "A=" << sum << " eps=" << eps << " has valid K "
                      << largest;
      }
    }
  }
}

TEST(PartitionScheduleTest, RejectsBadEpsilon) {
  const int64_t a[] = {1, 1, 2};
  EXPECT_THROW(GeneratePartitionSchedule(a, Q("3/4")), InvalidParameter);
  EXPECT_THROW(GeneratePartitionSchedule(a, Q("1/2")), InvalidParameter);
  EXPECT_THROW(GeneratePartitionSchedule(a, 0), InvalidParameter);
  const int64_t zero[] = {1, 0};
  EXPECT_THROW(GeneratePartitionSchedule(zero, Q("1/4")), InvalidParameter);
}

TEST(PartitionScheduleTest, YesAndNoInstances) {
  const int64_t yes[] = {1, 1, 2};
  const int64_t no[] = {1, 1, 3};
  const SchedulingProblem a(GeneratePartitionSchedule(yes, Q("1/4")).instance);
  const SchedulingProblem b(GeneratePartitionSchedule(no, Q("1/4")).instance);
  EXPECT_EQ(a.schedules().size(), 32u);
  EXPECT_EQ(SubsetMinOneExact(a.schedules().points(), Q("1/4")), 2u);
  EXPECT_EQ(SubsetMinOneExact(b.schedules().points(), Q("1/4")), 1u);
  EXPECT_EQ(GreedyMinAlgorithm(b, Q("1/4")).set[0].token, "2,2,2,1,2");
}

TEST(ThreeObjectiveTrapTest, Example) {
  const ExplicitInstance inst =
      GenerateThreeObjectiveTrap(1, 2, Vec({1, 1, 8}), true);
  ASSERT_EQ(inst.size(), 5u);
  EXPECT_EQ(inst.points()[1].token, "x1");
  EXPECT_EQ(inst.points()[1].image, Vec({2, 4, 4}));
  EXPECT_EQ(inst.points()[3].token, "x1p");
  EXPECT_EQ(inst.points()[3].image, Vec({2, 4, 3}));
  EXPECT_THROW(GenerateThreeObjectiveTrap(1, 2, Vec({1, 1, 2}), false),
               InvalidParameter);
}

TEST(ThreeObjectiveTrapTest, PairwiseMatrix) {
  for (const Rational& eps : {Q("1/2"), Rational(1)}) {
    for (int n = 1; n <= 4; ++n) {
      const ExplicitInstance inst =
          GenerateThreeObjectiveTrap(eps, n, Vec({1, 1, 8}), true);
      const ApproxFactor alpha = OneExactAlpha(eps, 3);
      const auto& pts = inst.points();
      auto index = [](const std::string& token) {
        return std::stoi(token.substr(1));
      };
      for (const auto& y : pts) {
        if (y.token == "x0") continue;
        const bool prime = y.token.back() == 'p';
        EXPECT_EQ(AlphaDominates(pts[0].image, y.image, alpha), !prime)
            << y.token;
      }
      for (const auto& a : pts) {
        for (const auto& b : pts) {
          if (a.token == "x0" || b.token == "x0" || a.token == b.token) continue;
          const bool paired = index(a.token) == index(b.token);
          if (!paired) {
            EXPECT_FALSE(AlphaDominates(a.image, b.image, alpha))
                << a.token << " vs " << b.token;
          }
        }
      }
    }
  }
}

TEST(ThreeObjectiveTrapTest, Dichotomy) {
  for (int n = 1; n <= 3; ++n) {
    const ExplicitInstance plain =
        GenerateThreeObjectiveTrap(1, n, Vec({1, 1, 8}), false);
    const ExplicitInstance trap =
        GenerateThreeObjectiveTrap(1, n, Vec({1, 1, 8}), true);
    EXPECT_EQ(SubsetMinOneExact(plain.points(), 1), 1u);
    EXPECT_GE(SubsetMinOneExact(trap.points(), 1),
              static_cast<std::size_t>(n + 1));
  }
}

TEST(RandomExplicitTest, DeterministicAndValid) {
  EXPECT_EQ(GenerateRandomExplicit(2, 0, 3, 1).size(), 0u);
  const ExplicitInstance a = GenerateRandomExplicit(3, 12, 4, 7);
  const ExplicitInstance b = GenerateRandomExplicit(3, 12, 4, 7);
  EXPECT_EQ(a.points(), b.points());
  EXPECT_EQ(a.bound_exponent(), 4);
  EXPECT_NE(a.points(), GenerateRandomExplicit(3, 12, 4, 8).points());
  // Reloading at the same exponent passes validation.
  EXPECT_NO_THROW(ExplicitInstance(3, a.points(), 4));
  EXPECT_THROW(GenerateRandomExplicit(1, 3, 4, 1), InvalidParameter);
}

TEST(GeneratedInstancesTest, ValidAtTheirExponent) {
  std::vector<ExplicitInstance> all = {
      GenerateChain(Q("1/3"), 5), GenerateHiddenPoint(Q("1/2"), 3, 5, true),
      GenerateThreeObjectiveTrap(Q("1/2"), 3, Vec({2, 3, 9}), true),
      GenerateRandomExplicit(2, 20, 2, 3)};
  for (const auto& inst : all) {
    EXPECT_NO_THROW(
        ExplicitInstance(inst.num_objectives(), inst.points(), inst.bound_exponent()));
  }
}

}  // namespace
}  // namespace molp
