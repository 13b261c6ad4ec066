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

#include <random>
#include <string>
#include <utility>

#include "molp/errors.h"

namespace molp {

namespace {

void RequirePositive(const Rational& epsilon) {
  if (epsilon.sign() <= 0) {
    throw InvalidParameter("epsilon must be positive, got " +
                           epsilon.ToString());
  }
}

}  // namespace

ExplicitInstance GenerateChain(const Rational& epsilon, int n) {
  RequirePositive(epsilon);
  if (n < 1) throw InvalidParameter("n must be at least 1");
  const Rational square = (Rational(1) + epsilon).Pow(2);
  std::vector<EvaluatedSolution> points;
  Rational f2(1);
  for (int i = 0; i <= n; ++i) {
    const Rational f1 = Rational(1) + Rational(n - i, n) * epsilon;
    points.push_back({"x" + std::to_string(i), ObjectiveVector({f1, f2})});
    f2 *= square;
  }
  return ExplicitInstance(2, std::move(points));
}

ExplicitInstance GenerateHiddenPoint(const Rational& epsilon,
                                     const Rational& f1_x2,
                                     const Rational& f2_x2, bool include_x3) {
  RequirePositive(epsilon);
  if (f1_x2 < Rational(2) || f2_x2 < Rational(2)) {
    throw InvalidParameter("both values of x2 must be at least 2");
  }
  std::vector<EvaluatedSolution> points;
  points.push_back({"x1", ObjectiveVector({f1_x2 - Rational(1),
                                           (Rational(1) + epsilon) * f2_x2})});
  points.push_back({"x2", ObjectiveVector({f1_x2, f2_x2})});
  if (include_x3) {
    points.push_back({"x3", ObjectiveVector({f1_x2, f2_x2 - Rational(1)})});
  }
  return ExplicitInstance(2, std::move(points));
}

bool PartitionKValid(int64_t k, int64_t sum, const Rational& epsilon) {
  const Rational big(k);
  const Rational a(sum);
  const Rational lhs = (big + a) / (Rational(1) + epsilon);
  const Rational half = a / Rational(2);
  return k > 0 && lhs > big + half && lhs <= big + half + Rational(1) &&
         lhs <= Rational(2) * big;
}

PartitionSchedule GeneratePartitionSchedule(std::span<const int64_t> values,
                                            const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1, 2)) {
    throw InvalidParameter("epsilon must lie in (0, 1/2), got " +
                           epsilon.ToString());
  }
  if (values.empty()) throw InvalidParameter("need at least one value");
  int64_t sum = 0;
  for (int64_t v : values) {
    if (v <= 0) throw InvalidParameter("partition values must be positive");
    sum += v;
  }
  // Largest integer strictly below A (1-eps) / (2 eps).
  const Rational ceiling =
      Rational(sum) * (Rational(1) - epsilon) / (Rational(2) * epsilon);
  const BigInt k_big = ceiling.Ceil() - 1;
  if (!k_big.fits_slong_p() || k_big <= 0 ||
      !PartitionKValid(k_big.get_si(), sum, epsilon)) {
    throw InvalidParameter("no positive K meets the scheduling conditions for "
                           "A = " + std::to_string(sum) + " and epsilon = " +
                           epsilon.ToString());
  }
  const int64_t k = k_big.get_si();

  std::vector<Job> jobs;
  for (std::size_t j = 0; j < values.size(); ++j) {
    const Rational a(values[j]);
    jobs.push_back({"j" + std::to_string(j + 1), {a, a}, {a, Rational(0)}});
  }
  jobs.push_back({"big1", {Rational(k), Rational(k)}, {Rational(1), Rational(2)}});
  jobs.push_back({"big2", {Rational(k), Rational(k)}, {Rational(2), Rational(1)}});
  return PartitionSchedule{SchedulingInstance(2, std::move(jobs)), k};
}

ExplicitInstance GenerateThreeObjectiveTrap(const Rational& epsilon, int n,
                                            const ObjectiveVector& base,
                                            bool include_primes) {
  RequirePositive(epsilon);
  if (n < 1) throw InvalidParameter("n must be at least 1");
  if (base.size() != 3) throw InvalidParameter("base needs three values");
  const Rational factor = Rational(1) + epsilon;
  const Rational third = base[2] / factor;
  if (base[2] < Rational(2) || third - Rational(1) <= Rational(0)) {
    throw InvalidParameter("third base value too small: need f_3 >= 2 and "
                           "f_3/(1+eps) - 1 > 0");
  }
  std::vector<EvaluatedSolution> points;
  points.push_back({"x0", base});
  std::vector<EvaluatedSolution> primes;
  const Rational square = factor.Pow(2);
  Rational f2 = base[1];
  for (int i = 1; i <= n; ++i) {
    f2 *= square;
    const Rational f1 = base[0] + Rational(n - i);
    points.push_back(
        {"x" + std::to_string(i), ObjectiveVector({f1, f2, third})});
    if (include_primes) {
      primes.push_back({"x" + std::to_string(i) + "p",
                        ObjectiveVector({f1, f2, third - Rational(1)})});
    }
  }
  for (auto& p : primes) points.push_back(std::move(p));
  return ExplicitInstance(3, std::move(points));
}

ExplicitInstance GenerateRandomExplicit(std::size_t p, std::size_t count,
                                        int bound_exponent, uint64_t seed) {
  if (p < 2) throw InvalidParameter("p must be at least 2");
  if (bound_exponent < 1 || bound_exponent > 20) {
    throw InvalidParameter("bound exponent must lie in [1, 20]");
  }
  const uint64_t low = uint64_t{1} << bound_exponent;
  const uint64_t high = uint64_t{1} << (3 * bound_exponent);
  const uint64_t span = high - low + 1;
  const Rational unit = Separation(bound_exponent);
  std::mt19937_64 rng(seed);
  std::vector<EvaluatedSolution> points;
  points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Rational> values;
    values.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
      const uint64_t step = low + rng() % span;
      values.push_back(Rational(BigInt(static_cast<unsigned long>(step))) *
                       unit);
    }
    points.push_back(
        {"r" + std::to_string(k), ObjectiveVector(std::move(values))});
  }
  return ExplicitInstance(p, std::move(points), bound_exponent);
}

}  // namespace molp
