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

// Instance families with known one-exact set sizes, and random instances.

#ifndef MOLP_GENERATORS_H_
#define MOLP_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "molp/explicit_problem.h"
#include "molp/objective.h"
#include "molp/rational.h"
#include "molp/scheduling_problem.h"

namespace molp {

// Points x_0..x_n with f(x_i) = (1 + (n-i)/n eps, (1+eps)^(2i)). No point
// (1, 1+eps)-approximates another, so every one-exact eps-Pareto set is the
// whole instance, while {x_0} alone is an eps-Pareto set.
ExplicitInstance GenerateChain(const Rational& epsilon, int n);

// x_2 = (a, b), x_1 = (a-1, (1+eps) b) and optionally x_3 = (a, b-1).
// {x_1} is one-exact without x_3; with x_3 two points are needed.
// Requires a >= 2 and b >= 2.
ExplicitInstance GenerateHiddenPoint(const Rational& epsilon,
                                     const Rational& f1_x2,
                                     const Rational& f2_x2, bool include_x3);

struct PartitionSchedule {
  SchedulingInstance instance;
  // Processing time of the two large jobs.
  int64_t k = 0;
};

// Two-machine schedule built from Partition values a: job j has time a_j on
// both machines and costs (a_j, 0); two large jobs of time K have costs
// (1, 2) and (2, 1). K is the largest integer with (K+A)/(1+eps) > K + A/2,
// which also satisfies (K+A)/(1+eps) <= K + A/2 + 1 and
// (K+A)/(1+eps) <= 2K whenever any integer does; all three are checked
// exactly. Throws InvalidParameter if eps is not in (0, 1/2), a value is not
// positive, or no positive K satisfies the three conditions.
PartitionSchedule GeneratePartitionSchedule(std::span<const int64_t> values,
                                            const Rational& epsilon);

// The three conditions on K above, evaluated exactly.
bool PartitionKValid(int64_t k, int64_t sum, const Rational& epsilon);

// x_0 = base and, for i = 1..n, x_i = (b_1 + n - i, (1+eps)^(2i) b_2,
// b_3/(1+eps)); with primes also x'_i equal to x_i but with third value
// b_3/(1+eps) - 1. Requires positive base values with b_3 >= 2 and
// b_3/(1+eps) - 1 > 0.
ExplicitInstance GenerateThreeObjectiveTrap(const Rational& epsilon, int n,
                                            const ObjectiveVector& base,
                                            bool include_primes);

// `count` points with coordinates k 2^-2M, k uniform in [2^M, 2^3M], drawn
// from a 64-bit Mersenne twister seeded with `seed`. Tokens are r0, r1, ...
// The instance declares bound exponent M. Requires 1 <= M <= 20.
ExplicitInstance GenerateRandomExplicit(std::size_t p, std::size_t count,
                                        int bound_exponent, uint64_t seed);

}  // namespace molp

#endif  // MOLP_GENERATORS_H_
