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

// Brute-force ground truth over explicit instances.

#ifndef MOLP_VERIFY_H_
#define MOLP_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "molp/explicit_problem.h"
#include "molp/objective.h"
#include "molp/oracles.h"
#include "molp/rational.h"

namespace molp {

struct AuditSummary {
  std::size_t total = 0;
  // All calls, including those issued inside reductions.
  std::map<OracleKind, std::size_t> by_kind;
  // Calls issued directly by the algorithm.
  std::map<OracleKind, std::size_t> top_level_by_kind;
  std::map<Rational, std::size_t> by_delta;
  std::optional<Rational> max_inverse_delta;

  std::size_t Calls(OracleKind kind) const;
  std::size_t TopLevelCalls(OracleKind kind) const;
};

AuditSummary SummarizeAudit(const OracleAudit& audit);

struct VerificationReport {
  bool pass = true;
  // On failure: an instance point no member approximates, the member that
  // comes closest, and the factor vector that member would need.
  std::optional<EvaluatedSolution> uncovered;
  std::optional<std::string> closest_token;
  std::vector<Rational> needed_factor;

  std::size_t set_size = 0;
  std::optional<std::size_t> minimum_size;
  std::optional<AuditSummary> audit;

  // key=value lines.
  std::string Serialize() const;
};

// Passes iff every instance point is alpha-dominated by some member of
// `set`. Throws ContractViolation when a member is not a feasible solution
// of `instance` with the stated image.
VerificationReport VerifyOneExact(std::span<const EvaluatedSolution> set,
                                  const ExplicitInstance& instance,
                                  const ApproxFactor& alpha);

// Non-dominated points; among equal images the smallest token is kept.
// Sorted by image.
std::vector<EvaluatedSolution> BruteForcePareto(
    const ExplicitInstance& instance);

struct MinimumCover {
  std::size_t size = 0;
  std::vector<EvaluatedSolution> members;
};

inline constexpr std::size_t kExhaustiveCap = 20;

// Smallest subset of the instance that alpha-dominates every point, found
// by exhaustive search by increasing size. Points with equal images are
// merged first (the earliest is kept). Among minimum covers the one with the
// smallest bitmask over point indices is returned. Throws InvalidParameter
// above `cap` distinct images (at most 63).
MinimumCover ExhaustiveMinCover(const ExplicitInstance& instance,
                                const ApproxFactor& alpha,
                                std::size_t cap = kExhaustiveCap);

// ExhaustiveMinCover with alpha = (1, 1+eps, ..., 1+eps).
MinimumCover ExhaustiveMinOneExact(const ExplicitInstance& instance,
                                   const Rational& epsilon,
                                   std::size_t cap = kExhaustiveCap);

}  // namespace molp

#endif  // MOLP_VERIFY_H_
