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

// The adapter contract every multiobjective problem implements.
//
// An adapter exposes p objectives, a bound exponent M such that every
// objective value of every feasible solution lies in [2^-M, 2^M] and any two
// distinct values of the same objective differ by at least 2^-2M, and some
// subset of three scalarized subproblems, each optimizing one objective `i`
// under bounds on the others:
//
//   Constrained^i(B):      NO iff nothing meets f_j <= B_j for all j != i;
//                          otherwise a minimizer of f_i under those bounds.
//   Restrict^i_d(B):       as Constrained, but f_i may exceed the optimum by
//                          a factor (1+d).
//   DualRestrict^i_d(S):   NO is allowed only when nothing meets f_j <= S_j;
//                          a solution must have f_i <= opt_i(S) and
//                          f_j <= (1+d) S_j.
//
// Bounds are passed as p-1 values for the objectives j != i, in increasing
// order of j. Objective indices are 0-based.

#ifndef MOLP_PROBLEM_H_
#define MOLP_PROBLEM_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "molp/objective.h"
#include "molp/rational.h"

namespace molp {

// std::nullopt encodes NO.
using OracleAnswer = std::optional<EvaluatedSolution>;

enum class OracleKind { kConstrained, kRestrict, kDualRestrict, kBoxQuery };

std::string OracleKindName(OracleKind kind);

struct Capabilities {
  std::vector<bool> constrained;
  std::vector<bool> restrict;
  std::vector<bool> dual_restrict;
  // Minimum-f_1 query over an axis-parallel box in objectives 2..p.
  bool box_query = false;

  static Capabilities None(std::size_t p);
  static Capabilities All(std::size_t p);
};

class Problem {
 public:
  virtual ~Problem() = default;

  virtual std::size_t num_objectives() const = 0;
  virtual int bound_exponent() const = 0;
  virtual Capabilities capabilities() const = 0;

  // Default implementations throw UnsupportedOracle.
  virtual OracleAnswer Constrained(std::size_t objective,
                                   std::span<const Rational> bounds) const;
  virtual OracleAnswer Restrict(std::size_t objective, const Rational& delta,
                                std::span<const Rational> bounds) const;
  virtual OracleAnswer DualRestrict(std::size_t objective,
                                    const Rational& delta,
                                    std::span<const Rational> bounds) const;
  // Feasible solution of minimum f_1 whose objectives 2..p lie in the closed
  // box [lower_j, upper_j]; `lower` and `upper` have p-1 entries.
  virtual OracleAnswer MinFirstInBox(std::span<const Rational> lower,
                                     std::span<const Rational> upper) const;

  // Image of a witness token, or nullopt if the token names no feasible
  // solution.
  virtual std::optional<ObjectiveVector> Evaluate(
      const std::string& token) const = 0;
};

// Exposes a subset of another problem's capabilities; everything else is
// forwarded. Used to force reductions on adapters that have native oracles.
class MaskedProblem final : public Problem {
 public:
  MaskedProblem(const Problem& base, Capabilities mask);

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
  const Problem& base_;
  Capabilities mask_;
};

// The bound on objective j inside a (p-1)-entry bound list for objective i.
const Rational& BoundFor(std::span<const Rational> bounds, std::size_t i,
                         std::size_t j);

// Lower corner 2^-M and upper corner 2^M of the value range.
Rational RangeLow(int bound_exponent);
Rational RangeHigh(int bound_exponent);
// 2^-2M, the minimum gap between distinct values of one objective.
Rational Separation(int bound_exponent);

}  // namespace molp

#endif  // MOLP_PROBLEM_H_
