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

// Audited access to a problem's subproblem oracles, plus the generic
// reductions between them.
//
// An OracleSession is the run context of one algorithm execution. Every
// subproblem call goes through it and is appended to its OracleAudit. When
// the adapter lacks a native oracle the session falls back to a reduction:
//
//   DualRestrict^1  <- binary search over Restrict^2     (p = 2)
//   Restrict^2      <- binary search over DualRestrict^1 (p = 2)
//   Constrained^i   <- DualRestrict^i with a tiny step and bound snapping
//   Restrict^i, DualRestrict^i <- Constrained^i (an exact answer is valid)
//
// Calls issued by a reduction are recorded one level deeper than the call
// they serve.

#ifndef MOLP_ORACLES_H_
#define MOLP_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "molp/objective.h"
#include "molp/problem.h"
#include "molp/rational.h"
#include "molp/schedule.h"

namespace molp {

struct AuditRecord {
  OracleKind kind = OracleKind::kDualRestrict;
  std::size_t objective = 0;
  std::optional<Rational> delta;
  std::vector<Rational> bounds;
  OracleAnswer answer;
  std::size_t ordinal = 0;
  // 0 for calls issued by an algorithm, k+1 for calls a reduction issued
  // while serving a depth-k call.
  int depth = 0;
  // False when the call was served by a reduction instead of the adapter.
  bool native = true;
};

// Append-only ledger of oracle invocations, in call order.
class OracleAudit {
 public:
  // Returns the slot index; the record's ordinal is set to that index.
  std::size_t Append(AuditRecord record);
  void SetAnswer(std::size_t slot, OracleAnswer answer);
  void SetNative(std::size_t slot, bool native);
  // Appends all of `other`'s records, shifting their depth.
  void Merge(const OracleAudit& other, int depth_offset = 0);

  const std::vector<AuditRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  // Number of records of `kind` at `depth` (any depth when depth < 0).
  std::size_t Count(OracleKind kind, int depth = 0) const;

  // One line per record: kind, 1-based index, delta, bounds, answer;
  // tab-separated.
  std::string Export() const;

 private:
  std::vector<AuditRecord> records_;
};

struct SessionOptions {
  // Lets the session fall back to reductions for missing oracles.
  bool allow_reductions = true;
  // Denominator cap for step sizes derived inside reductions.
  int64_t denominator_cap = kDefaultDenominatorCap;
};

class OracleSession {
 public:
  explicit OracleSession(const Problem& problem, SessionOptions options = {});

  OracleSession(const OracleSession&) = delete;
  OracleSession& operator=(const OracleSession&) = delete;

  const Problem& problem() const { return problem_; }
  std::size_t num_objectives() const { return p_; }
  int bound_exponent() const { return bound_exponent_; }
  const SessionOptions& options() const { return options_; }
  const Capabilities& native() const { return native_; }

  OracleAnswer Constrained(std::size_t objective,
                           std::span<const Rational> bounds);
  OracleAnswer Restrict(std::size_t objective, const Rational& delta,
                        std::span<const Rational> bounds);
  OracleAnswer DualRestrict(std::size_t objective, const Rational& delta,
                            std::span<const Rational> bounds);
  OracleAnswer MinFirstInBox(std::span<const Rational> lower,
                             std::span<const Rational> upper);

  // Whether a call would be served, natively or through a reduction.
  bool CanConstrained(std::size_t objective) const;
  bool CanRestrict(std::size_t objective) const;
  bool CanDualRestrict(std::size_t objective) const;

  const OracleAudit& audit() const { return audit_; }
  OracleAudit& mutable_audit() { return audit_; }
  OracleAudit TakeAudit();

 private:
  enum class Route { kNative, kViaConstrained, kReduction, kNone };

  Route ConstrainedRoute(std::size_t objective) const;
  Route RestrictRoute(std::size_t objective) const;
  Route DualRestrictRoute(std::size_t objective) const;
  void CheckBounds(std::size_t objective,
                   std::span<const Rational> bounds) const;
  std::size_t Open(OracleKind kind, std::size_t objective,
                   const std::optional<Rational>& delta,
                   std::span<const Rational> bounds, bool native);
  void Close(std::size_t slot, const OracleAnswer& answer);

  const Problem& problem_;
  SessionOptions options_;
  std::size_t p_;
  int bound_exponent_;
  Capabilities native_;
  OracleAudit audit_;
  int depth_ = 0;
};

// DualRestrict^1_delta(S_2) for biobjective problems through Restrict^2_delta:
// bisection for the smallest budget B_1 on the grid 2^-M + k 2^-2M,
// k = 0..2^3M - 2^M, whose Restrict^2 answer has f_2 <= (1+delta) S_2. The
// separation of feasible f_1 values makes the found answer satisfy
// f_1 <= opt_1(S_2) whether or not those values lie on the grid. Issues
// 1 + ceil(log2(2^3M - 2^M + 1)) Restrict calls.
OracleAnswer ReduceDualRestrict1ViaRestrict2(OracleSession& session,
                                             const Rational& delta,
                                             const Rational& bound2);

// Restrict^2_delta(B_1) for biobjective problems through DualRestrict^1:
// bisection over the geometric grid 2^-M (1+d)^k, k = 0..K with
// (1+d)^K >= 2^2M, for the smallest S_2 whose DualRestrict^1_d answer has
// f_1 <= B_1, where (1+d)^2 <= 1+delta. Issues 1 + ceil(log2(K+1))
// DualRestrict calls.
OracleAnswer ReduceRestrict2ViaDualRestrict1(OracleSession& session,
                                             const Rational& delta,
                                             const Rational& bound1);

// Number of Restrict calls ReduceDualRestrict1ViaRestrict2 issues for M.
int64_t DualRestrictReductionCalls(int bound_exponent);
// Number of DualRestrict calls ReduceRestrict2ViaDualRestrict1 issues.
int64_t RestrictReductionCalls(int bound_exponent, const Rational& delta,
                               int64_t denominator_cap);

// Step used by ReduceRestrict2ViaDualRestrict1: largest d with
// (1+d)^2 <= 1+delta under a cap that always admits a positive d.
Rational ReductionStep(const Rational& delta, int64_t denominator_cap);

// Exact Constrained^i answer from DualRestrict^i with delta = 2^(-3M-1).
// Bounds above 2^M are clamped. When an answer overshoots a bound B_j, the
// overshoot is smaller than the value separation, so no feasible value lies
// in (f_j(x) - 2^-2M, B_j]; the bound is snapped to f_j(x) - 2^-2M and the
// call repeated. Each objective is snapped at most once.
OracleAnswer ConstrainedViaDualRestrict(OracleSession& session,
                                        std::size_t objective,
                                        std::span<const Rational> bounds);

// Producer of a one-exact Pareto set for a given accuracy.
using ParetoRoutine = std::function<std::vector<EvaluatedSolution>(
    const Problem& problem, const Rational& epsilon)>;

// DualRestrict^1_delta(S) from any one-exact Pareto set routine: compute a
// one-exact delta-Pareto set and return its member of minimum f_1 among
// those with f_j <= (1+delta) S_j for all j >= 2, or NO if there is none.
OracleAnswer DualRestrictViaParetoRoutine(const ParetoRoutine& routine,
                                          const Problem& problem,
                                          const Rational& delta,
                                          std::span<const Rational> bounds);

}  // namespace molp

#endif  // MOLP_ORACLES_H_
