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

#ifndef MOLP_SCHEDULE_H_
#define MOLP_SCHEDULE_H_

#include <cstdint>
#include <vector>

#include "molp/rational.h"

namespace molp {

inline constexpr int64_t kDefaultDenominatorCap = 1'000'000;

// The step size an algorithm actually runs with. The ideal step is the
// irrational k-th root of 1+epsilon minus one; `delta` is its best rational
// under-approximation and `effective_epsilon` = (1+delta)^k - 1 <= epsilon is
// the accuracy the algorithm's guarantees are stated against.
struct EpsilonSchedule {
  Rational epsilon;
  Rational delta;
  int root_order = 0;
  Rational effective_epsilon;
};

// Largest delta > 0 with denominator <= denominator_cap such that
// (1+delta)^root_order <= 1+epsilon, found by a Stern-Brocot descent with
// exact power checks. Throws InvalidParameter on bad arguments or when no
// positive delta fits under the cap.
EpsilonSchedule DeriveDelta(const Rational& epsilon, int root_order,
                            int64_t denominator_cap = kDefaultDenominatorCap);

// Smallest u >= 0 with base^u >= target, by repeated multiplication.
// Requires base > 1.
int64_t SmallestExponentReaching(const Rational& base, const Rational& target);

// Powers base^i for i in [lo, hi], computed once by repeated multiplication.
class PowerTable {
 public:
  PowerTable(const Rational& base, int64_t lo, int64_t hi);

  const Rational& operator()(int64_t exponent) const;
  int64_t lo() const { return lo_; }
  int64_t hi() const { return hi_; }

 private:
  int64_t lo_;
  int64_t hi_;
  std::vector<Rational> powers_;
};

}  // namespace molp

#endif  // MOLP_SCHEDULE_H_
