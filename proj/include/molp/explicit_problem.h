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

// Problems whose feasible solutions are listed explicitly. All oracles are
// answered exactly by scanning the list.

#ifndef MOLP_EXPLICIT_PROBLEM_H_
#define MOLP_EXPLICIT_PROBLEM_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "molp/objective.h"
#include "molp/problem.h"
#include "molp/rational.h"

namespace molp {

// A validated list of feasible solutions. Tokens are unique; images may
// repeat. The bound exponent is either declared (and checked) or the
// smallest M >= 1 for which the range and separation conditions hold.
class ExplicitInstance {
 public:
  ExplicitInstance(std::size_t p, std::vector<EvaluatedSolution> points,
                   std::optional<int> declared_bound_exponent = std::nullopt);

  std::size_t num_objectives() const { return p_; }
  int bound_exponent() const { return bound_exponent_; }
  const std::vector<EvaluatedSolution>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  const EvaluatedSolution* Find(const std::string& token) const;

  // Smallest M >= 1 such that every value lies in [2^-M, 2^M] and distinct
  // values of one objective differ by at least 2^-2M.
  static int SmallestBoundExponent(std::size_t p,
                                   std::span<const EvaluatedSolution> points);
  // Empty string if `points` meet both conditions at M, otherwise the first
  // violation found.
  static std::string CheckBoundExponent(
      std::size_t p, std::span<const EvaluatedSolution> points, int m);

 private:
  std::size_t p_;
  std::vector<EvaluatedSolution> points_;
  std::map<std::string, std::size_t> by_token_;
  int bound_exponent_ = 1;
};

// How the adapter picks among several valid answers.
enum class AnswerPolicy {
  // Restrict: an exact optimum. DualRestrict: minimum f_i over the relaxed
  // region, NO only when that region is empty.
  kBest,
  // Restrict: the worst solution the contract allows (largest f_i within
  // (1+delta) opt_i). DualRestrict: NO whenever NO is allowed, otherwise the
  // allowed solution with the largest relaxed objectives.
  kAdversarial,
};

struct ExplicitOptions {
  AnswerPolicy restrict_policy = AnswerPolicy::kBest;
  AnswerPolicy dual_restrict_policy = AnswerPolicy::kBest;
};

class ExplicitProblem final : public Problem {
 public:
  explicit ExplicitProblem(ExplicitInstance instance,
                           ExplicitOptions options = {});

  const ExplicitInstance& instance() const { return instance_; }

  std::size_t num_objectives() const override;
  int bound_exponent() const override;
  Capabilities capabilities() const override;
  OracleAnswer Constrained(std::size_t objective,
                           std::span<const Rational> bounds) const override;
  OracleAnswer Restrict(std::size_t objective, const Rational& delta,
                        std::span<const Rational> bounds) const override;
  OracleAnswer DualRestrict(std::size_t objective, const Rational& delta,
                            std::span<const Rational> bounds) const override;
  OracleAnswer MinFirstInBox(std::span<const Rational> lower,
                             std::span<const Rational> upper) const override;
  std::optional<ObjectiveVector> Evaluate(
      const std::string& token) const override;

 private:
  // Points with f_j <= scale * B_j for all j != objective.
  std::vector<const EvaluatedSolution*> Within(
      std::size_t objective, std::span<const Rational> bounds,
      const Rational& scale) const;

  ExplicitInstance instance_;
  ExplicitOptions options_;
};

// Exact opt_i(bounds) over an explicit list; nullopt when infeasible.
std::optional<Rational> BruteForceOpt(const ExplicitInstance& instance,
                                      std::size_t objective,
                                      std::span<const Rational> bounds);

}  // namespace molp

#endif  // MOLP_EXPLICIT_PROBLEM_H_
