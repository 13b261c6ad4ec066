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

// Algorithms that build one-exact epsilon-Pareto sets, i.e. sets P such that
// every feasible x' has some x in P with f_1(x) <= f_1(x') and
// f_j(x) <= (1+eps) f_j(x') for j >= 2.
//
//   ExistenceCover      box queries over geometric stripes (explicit lists).
//   GridAlgorithm       one DualRestrict^1 call per grid cell, any p.
//   AdaptiveAlgorithm   biobjective; walks S_2 downwards, size <= 2 |P*|.
//   DyAlgorithm         biobjective; Restrict^2 + DualRestrict^1 per step.
//   GreedyMinAlgorithm  biobjective; exact Constrained, minimum size.

#ifndef MOLP_ALGORITHMS_H_
#define MOLP_ALGORITHMS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "molp/objective.h"
#include "molp/oracles.h"
#include "molp/problem.h"
#include "molp/rational.h"
#include "molp/schedule.h"

namespace molp {

// States of AdaptiveAlgorithm. kProbe covers the first two DualRestrict
// calls of an outer iteration, kDescend the inner loop while f_1 stays
// equal, kCommit the insertion into P and the large S_2 step.
enum class AdaptivePhase { kProbe, kDescend, kCommit, kDone };

std::string AdaptivePhaseName(AdaptivePhase phase);

struct RunStats {
  // Grid cells or stripes queried.
  int64_t stripes_visited = 0;
  // Iterations of the main loop (outer and inner for the adaptive method).
  int64_t loop_iterations = 0;
  // Assignments to S_2 after its initialization.
  int64_t bound_updates = 0;
  // Phases entered by AdaptiveAlgorithm, in order.
  std::vector<AdaptivePhase> phase_trace;
};

struct ParetoRunResult {
  std::vector<EvaluatedSolution> set;
  OracleAudit audit;
  // Absent for methods that run with epsilon itself.
  std::optional<EpsilonSchedule> schedule;
  RunStats stats;
};

// Run state handed to the observer each time AdaptiveAlgorithm evaluates its
// inner loop condition.
struct AdaptiveCheckpoint {
  const EvaluatedSolution& x;
  const EvaluatedSolution& next;
  const Rational& bound2;
  const std::vector<EvaluatedSolution>& committed;
  const EpsilonSchedule& schedule;
};

struct AlgorithmOptions {
  int64_t denominator_cap = kDefaultDenominatorCap;
  // Drop members dominated by another member before returning.
  bool filter_dominated = false;
  // Check the run-state invariants of AdaptiveAlgorithm and throw
  // InvariantViolation on failure.
  bool assert_lemma2 = false;
  // Solve GridAlgorithm cells on several threads; results are merged in
  // cell order, so output and audit do not depend on the thread count.
  bool parallel_grid = false;
  int grid_threads = 0;
  bool allow_reductions = true;
  std::function<void(const AdaptiveCheckpoint&)> checkpoint_observer;
};

ParetoRunResult ExistenceCover(const Problem& problem, const Rational& epsilon,
                               const AlgorithmOptions& options = {});
ParetoRunResult GridAlgorithm(const Problem& problem, const Rational& epsilon,
                              const AlgorithmOptions& options = {});
ParetoRunResult AdaptiveAlgorithm(const Problem& problem,
                                  const Rational& epsilon,
                                  const AlgorithmOptions& options = {});
ParetoRunResult DyAlgorithm(const Problem& problem, const Rational& epsilon,
                            const AlgorithmOptions& options = {});
ParetoRunResult GreedyMinAlgorithm(const Problem& problem,
                                   const Rational& epsilon,
                                   const AlgorithmOptions& options = {});

enum class Algorithm { kGrid, kAdaptive, kDy, kGreedy, kExistence };

// "grid", "adaptive", "dy", "greedy", "existence".
std::string AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

ParetoRunResult RunAlgorithm(Algorithm algorithm, const Problem& problem,
                             const Rational& epsilon,
                             const AlgorithmOptions& options = {});

// Wraps an algorithm as a routine for DualRestrictViaParetoRoutine.
ParetoRoutine MakeParetoRoutine(Algorithm algorithm,
                                AlgorithmOptions options = {});

// Members not strictly dominated by another member, in input order.
std::vector<EvaluatedSolution> FilterDominated(
    const std::vector<EvaluatedSolution>& set);

// Number of grid points per objective used by GridAlgorithm: the smallest u
// with (1+delta)^u >= 2^M, doubled.
int64_t GridSide(const Rational& delta, int bound_exponent);

// Upper bound on AdaptiveAlgorithm's DualRestrict calls: the smallest u with
// (1+delta)^u >= 2^2M, plus 2.
int64_t AdaptiveCallCeiling(const Rational& delta, int bound_exponent);

}  // namespace molp

#endif  // MOLP_ALGORITHMS_H_
