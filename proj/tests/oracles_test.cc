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

#include "molp/oracles.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "molp/algorithms.h"
#include "molp/errors.h"
#include "molp/explicit_problem.h"
#include "test_support.h"

namespace molp {
namespace {

using molp_test::CheckConstrained;
using molp_test::CheckDualRestrict;
using molp_test::CheckRestrict;
using molp_test::Q;
using molp_test::Vec;

std::vector<Rational> B(const Rational& v) { return {v}; }

Capabilities Only(std::size_t p, bool constrained, bool restrict_oracle,
                  bool dual_restrict) {
  Capabilities c = Capabilities::None(p);
  for (std::size_t i = 0; i < p; ++i) {
    c.constrained[i] = constrained;
    c.restrict[i] = restrict_oracle;
    c.dual_restrict[i] = dual_restrict;
  }
  return c;
}

class ChainOracleTest : public ::testing::Test {
 protected:
  ExplicitProblem problem_{molp_test::ThreeChain()};
  OracleSession session_{problem_};
};

TEST_F(ChainOracleTest, ConstrainedExamples) {
  EXPECT_EQ(session_.Constrained(0, B(4))->image, Vec({Q("3/2"), 4}));
  EXPECT_FALSE(session_.Constrained(0, B(Q("1/2"))).has_value());
  EXPECT_EQ(session_.Constrained(0, B(16))->image, Vec({1, 16}));
}

TEST_F(ChainOracleTest, RestrictExamples) {
  const OracleAnswer a = session_.Restrict(1, Q("1/10"), B(Q("3/2")));
  ASSERT_TRUE(a.has_value());
  EXPECT_LE(a->image[0], Q("3/2"));
  EXPECT_LE(a->image[1], Q("11/10") * 4);
  EXPECT_EQ(a->image, Vec({Q("3/2"), 4}));
  EXPECT_FALSE(session_.Restrict(1, Q("1/10"), B(Q("1/2"))).has_value());
}

TEST_F(ChainOracleTest, DualRestrictExamples) {
  EXPECT_EQ(session_.DualRestrict(0, Q("1/2"), B(1))->image, Vec({2, 1}));
  EXPECT_FALSE(session_.DualRestrict(0, Q("1/2"), B(Q("1/2"))).has_value());
  EXPECT_EQ(session_.DualRestrict(0, Q("1/2"), B(16))->image, Vec({1, 16}));
}

TEST_F(ChainOracleTest, AuditRecordsEveryCall) {
  session_.Constrained(0, B(4));
  session_.Restrict(1, Q("1/10"), B(Q("3/2")));
  session_.DualRestrict(0, Q("1/2"), B(Q("1/2")));
  const OracleAudit& audit = session_.audit();
  ASSERT_EQ(audit.size(), 3u);
  EXPECT_EQ(audit.records()[1].delta, Q("1/10"));
  EXPECT_FALSE(audit.records()[0].delta.has_value());
  EXPECT_EQ(audit.Count(OracleKind::kDualRestrict), 1u);
  EXPECT_EQ(audit.Export(),
            "Constrained\t1\t-\t4\t3/2 4\n"
            "Restrict\t2\t1/10\t3/2\t3/2 4\n"
            "DualRestrict\t1\t1/2\t1/2\tNO\n");
}

TEST_F(ChainOracleTest, RejectsBadBounds) {
  EXPECT_THROW(session_.Constrained(0, std::vector<Rational>{1, 2}),
               ContractViolation);
  EXPECT_THROW(session_.DualRestrict(0, 0, B(1)), ContractViolation);
}

TEST(ReductionTest, DualRestrictViaRestrictExamples) {
  const ExplicitProblem base(molp_test::ThreeChain());
  const MaskedProblem masked(base, Only(2, false, true, false));
  OracleSession session(masked);
  EXPECT_EQ(session.DualRestrict(0, Q("1/10"), B(4))->image,
            Vec({Q("3/2"), 4}));
  // Below min f_2 / (1+delta).
  EXPECT_FALSE(session.DualRestrict(0, Q("1/10"), B(Q("9/10"))).has_value());
  EXPECT_GT(session.audit().Count(OracleKind::kRestrict, 1), 0u);

  const ExplicitProblem single(molp_test::Listing(2, {{1, 1}}));
  OracleSession direct(single);
  EXPECT_EQ(ReduceDualRestrict1ViaRestrict2(direct, Q("1/10"), 1)->image,
            Vec({1, 1}));
}

TEST(ReductionTest, RestrictViaDualRestrictExamples) {
  const ExplicitProblem base(molp_test::ThreeChain());
  const MaskedProblem masked(base, Only(2, false, false, true));
  OracleSession session(masked);
  const auto pts = base.instance().points();
  const OracleAnswer a = session.Restrict(1, Q("1/10"), B(Q("3/2")));
  EXPECT_EQ(CheckRestrict(pts, 1, Q("1/10"), B(Q("3/2")), a), "");
  EXPECT_FALSE(session.Restrict(1, Q("1/10"), B(Q("1/2"))).has_value());

  const ExplicitProblem single(molp_test::Listing(2, {{Q("3/4"), 5}}));
  OracleSession direct(single);
  EXPECT_EQ(ReduceRestrict2ViaDualRestrict1(direct, Q("1/10"), 1)->image,
            Vec({Q("3/4"), 5}));
}

TEST(ReductionTest, ConstrainedViaDualRestrictExamples) {
  const ExplicitProblem base(molp_test::ThreeChain());
  const MaskedProblem masked(base, Only(2, false, false, true));
  OracleSession session(masked);
  EXPECT_EQ(session.Constrained(0, B(4))->image, Vec({Q("3/2"), 4}));
  EXPECT_FALSE(session.Constrained(0, B(Q("1/2"))).has_value());
  EXPECT_EQ(session.Constrained(0, B(1))->image, Vec({2, 1}));
  const int m = base.bound_exponent();
  for (const AuditRecord& r : session.audit().records()) {
    if (r.kind == OracleKind::kDualRestrict) {
      EXPECT_EQ(r.delta, Rational::TwoPow(-3 * m - 1));
      EXPECT_EQ(r.depth, 1);
    }
  }
}

TEST(ReductionTest, ParetoRoutineExamples) {
  const ExplicitProblem chain(molp_test::ThreeChain());
  const ParetoRoutine grid = MakeParetoRoutine(Algorithm::kGrid);
  const auto pts = chain.instance().points();
  const OracleAnswer a =
      DualRestrictViaParetoRoutine(grid, chain, Q("1/10"), B(4));
  EXPECT_EQ(CheckDualRestrict(pts, 0, Q("1/10"), B(4), a), "");

  const ExplicitProblem empty(ExplicitInstance(2, {}));
  EXPECT_FALSE(
      DualRestrictViaParetoRoutine(grid, empty, Q("1/10"), B(4)).has_value());

  const OracleAnswer top =
      DualRestrictViaParetoRoutine(grid, chain, Q("1/10"), B(16));
  ASSERT_TRUE(top.has_value());
  EXPECT_EQ(top->image[0], 1);
}

TEST(ReductionTest, CallCountFormulas) {
  for (int m = 1; m <= 6; ++m) {
    // 1 + ceil(log2(2^3M - 2^M + 1)).
    const int64_t points = (int64_t{1} << (3 * m)) - (int64_t{1} << m) + 1;
    int64_t bits = 0;
    while ((int64_t{1} << bits) < points) ++bits;
    EXPECT_EQ(DualRestrictReductionCalls(m), 1 + bits) << "M=" << m;
  }
  // Restrict via DualRestrict at M = 1, delta = 1/10.
  const Rational d = ReductionStep(Q("1/10"), kDefaultDenominatorCap);
  EXPECT_LE((Rational(1) + d).Pow(2), Q("11/10"));
  const int64_t k = molp_test::ExponentFor(d, 4);
  int64_t bits = 0;
  while ((int64_t{1} << bits) < k + 1) ++bits;
  EXPECT_EQ(RestrictReductionCalls(1, Q("1/10"), kDefaultDenominatorCap),
            1 + bits);
}

TEST(ReductionTest, UnsupportedWithoutAnyRoute) {
  const ExplicitProblem base(molp_test::ThreeChain());
  const MaskedProblem none(base, Capabilities::None(2));
  OracleSession session(none);
  EXPECT_FALSE(session.CanDualRestrict(0));
  EXPECT_THROW(session.DualRestrict(0, 1, B(1)), UnsupportedOracle);
  SessionOptions strict;
  strict.allow_reductions = false;
  const MaskedProblem restrict_only(base, Only(2, false, true, false));
  OracleSession no_reductions(restrict_only, strict);
  EXPECT_THROW(no_reductions.DualRestrict(0, 1, B(1)), UnsupportedOracle);
}

struct FuzzCase {
  ExplicitInstance instance;
  std::size_t objective;
  Rational delta;
  std::vector<Rational> bounds;
};

FuzzCase RandomCase(std::mt19937_64& rng, std::size_t p) {
  const auto style = static_cast<molp_test::FuzzStyle>(rng() % 3);
  ExplicitInstance inst =
      molp_test::RandomListing(rng, p, rng() % 12, style, 1 + rng() % 3);
  static const Rational kDeltas[] = {Q("1/10"), Q("1/4"), Q("1/2"), 1,
                                     Q("1/100")};
  const Rational delta = kDeltas[rng() % 5];
  std::vector<Rational> bounds;
  for (std::size_t j = 0; j + 1 < p; ++j) {
    // Mostly feasible values (tight cases), sometimes arbitrary ones.
    if (!inst.empty() && rng() % 2 == 0) {
      bounds.push_back(inst.points()[rng() % inst.size()].image[1 + j % (p - 1)]);
    } else {
      bounds.push_back(Rational(static_cast<int64_t>(rng() % 64) + 1, 8));
    }
  }
  return {std::move(inst), rng() % p, delta, std::move(bounds)};
}

TEST(OracleContractTest, ExplicitPoliciesAgainstScan) {
  std::mt19937_64 rng(101);
  for (int k = 0; k < 600; ++k) {
    const FuzzCase c = RandomCase(rng, 2 + k % 2);
    const auto pts = c.instance.points();
    for (AnswerPolicy policy : {AnswerPolicy::kBest, AnswerPolicy::kAdversarial}) {
      const ExplicitProblem problem(c.instance, {policy, policy});
      OracleSession s(problem);
      EXPECT_EQ(CheckConstrained(pts, c.objective, c.bounds,
                                 s.Constrained(c.objective, c.bounds)),
                "");
      EXPECT_EQ(CheckRestrict(pts, c.objective, c.delta, c.bounds,
                              s.Restrict(c.objective, c.delta, c.bounds)),
                "");
      EXPECT_EQ(CheckDualRestrict(pts, c.objective, c.delta, c.bounds,
                                  s.DualRestrict(c.objective, c.delta, c.bounds)),
                "");
      EXPECT_EQ(s.audit().size(), 3u);
    }
  }
}

TEST(OracleContractTest, ReductionsAgainstScan) {
  std::mt19937_64 rng(202);
  for (int k = 0; k < 300; ++k) {
    const FuzzCase c = RandomCase(rng, 2);
    const auto pts = c.instance.points();
    for (AnswerPolicy policy : {AnswerPolicy::kBest, AnswerPolicy::kAdversarial}) {
      const ExplicitProblem problem(c.instance, {policy, policy});
      const MaskedProblem restrict_only(problem, Only(2, false, true, false));
      const MaskedProblem dual_only(problem, Only(2, false, false, true));
      OracleSession via_restrict(restrict_only);
      OracleSession via_dual(dual_only);
      EXPECT_EQ(CheckDualRestrict(pts, 0, c.delta, c.bounds,
                                  via_restrict.DualRestrict(0, c.delta, c.bounds)),
                "")
          << "case " << k;
      EXPECT_EQ(CheckRestrict(pts, 1, c.delta, c.bounds,
                              via_dual.Restrict(1, c.delta, c.bounds)),
                "")
          << "case " << k;
      EXPECT_LE(static_cast<int64_t>(via_restrict.audit().size()) - 1,
                DualRestrictReductionCalls(problem.bound_exponent()));
      EXPECT_LE(static_cast<int64_t>(via_dual.audit().size()) - 1,
                RestrictReductionCalls(problem.bound_exponent(), c.delta,
                                       kDefaultDenominatorCap));
    }
  }
}

TEST(OracleContractTest, ConstrainedViaDualRestrictIsExact) {
  std::mt19937_64 rng(303);
  for (int k = 0; k < 400; ++k) {
    const FuzzCase c = RandomCase(rng, 2 + k % 2);
    const auto pts = c.instance.points();
    for (AnswerPolicy policy : {AnswerPolicy::kBest, AnswerPolicy::kAdversarial}) {
      const ExplicitProblem problem(c.instance, {policy, policy});
      const std::size_t p = problem.num_objectives();
      const MaskedProblem dual_only(problem, Only(p, false, false, true));
      OracleSession s(dual_only);
      EXPECT_EQ(CheckConstrained(pts, c.objective, c.bounds,
                                 s.Constrained(c.objective, c.bounds)),
                "")
          << "case " << k;
    }
  }
}

TEST(OracleContractTest, ParetoRoutineAgainstScan) {
  std::mt19937_64 rng(404);
  for (int k = 0; k < 60; ++k) {
    FuzzCase c = RandomCase(rng, 2);
    c.delta = Q("1/4");
    const ExplicitProblem problem(c.instance);
    const auto pts = c.instance.points();
    for (Algorithm alg : {Algorithm::kGrid, Algorithm::kAdaptive,
                          Algorithm::kGreedy}) {
      const OracleAnswer a = DualRestrictViaParetoRoutine(
          MakeParetoRoutine(alg), problem, c.delta, c.bounds);
      EXPECT_EQ(CheckDualRestrict(pts, 0, c.delta, c.bounds, a), "");
    }
  }
}

// opt_i never increases when a bound grows.
TEST(OracleContractTest, OptimumIsMonotoneInBounds) {
  std::mt19937_64 rng(505);
  for (int k = 0; k < 300; ++k) {
    const FuzzCase c = RandomCase(rng, 2 + k % 2);
    std::vector<Rational> looser = c.bounds;
    looser[rng() % looser.size()] += Rational(static_cast<int64_t>(rng() % 8), 4);
    const auto tight = BruteForceOpt(c.instance, c.objective, c.bounds);
    const auto loose = BruteForceOpt(c.instance, c.objective, looser);
    if (tight.has_value()) {
      ASSERT_TRUE(loose.has_value());
      EXPECT_LE(*loose, *tight);
    }
    EXPECT_EQ(tight, molp_test::ScanOpt(c.instance.points(), c.objective,
                                        c.bounds));
  }
}

}  // namespace
}  // namespace molp
