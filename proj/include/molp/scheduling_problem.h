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

// Min-cost-makespan scheduling on unrelated machines, solved by enumerating
// all m^n assignments. Objective 1 is total cost plus one (costs may be
// zero, objective values must be positive); objective 2 is the makespan.

#ifndef MOLP_SCHEDULING_PROBLEM_H_
#define MOLP_SCHEDULING_PROBLEM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "molp/explicit_problem.h"
#include "molp/objective.h"
#include "molp/problem.h"
#include "molp/rational.h"

namespace molp {

struct Job {
  std::string token;
  // Indexed by machine.
  std::vector<Rational> time;
  std::vector<Rational> cost;
};

class SchedulingInstance {
 public:
  SchedulingInstance(int num_machines, std::vector<Job> jobs);

  int num_machines() const { return num_machines_; }
  const std::vector<Job>& jobs() const { return jobs_; }

  // Image of an assignment (machine index per job, 0-based).
  ObjectiveVector Evaluate(std::span<const int> assignment) const;

 private:
  int num_machines_;
  std::vector<Job> jobs_;
};

inline constexpr int64_t kDefaultScheduleCap = int64_t{1} << 15;

// Comma-separated 1-based machine indices, one per job.
std::string AssignmentToken(std::span<const int> assignment);
std::optional<std::vector<int>> ParseAssignmentToken(const std::string& token,
                                                     int num_machines,
                                                     std::size_t num_jobs);

// All assignments as an explicit instance. Throws UnsupportedOracle when
// m^n exceeds `cap` and ValidationError when some makespan is zero.
ExplicitInstance EnumerateSchedules(const SchedulingInstance& instance,
                                    int64_t cap = kDefaultScheduleCap);

// Exact Constrained^1 and Constrained^2 by enumeration.
class SchedulingProblem final : public Problem {
 public:
  explicit SchedulingProblem(const SchedulingInstance& instance,
                             int64_t cap = kDefaultScheduleCap);

  const SchedulingInstance& instance() const { return instance_; }
  const ExplicitInstance& schedules() const { return schedules_.instance(); }

  std::size_t num_objectives() const override { return 2; }
  int bound_exponent() const override;
  Capabilities capabilities() const override;
  OracleAnswer Constrained(std::size_t objective,
                           std::span<const Rational> bounds) const override;
  std::optional<ObjectiveVector> Evaluate(
      const std::string& token) const override;

 private:
  SchedulingInstance instance_;
  ExplicitProblem schedules_;
};

}  // namespace molp

#endif  // MOLP_SCHEDULING_PROBLEM_H_
