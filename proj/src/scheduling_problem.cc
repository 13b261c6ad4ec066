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

#include "molp/scheduling_problem.h"

#include <charconv>
#include <utility>

#include "molp/errors.h"

namespace molp {

SchedulingInstance::SchedulingInstance(int num_machines, std::vector<Job> jobs)
    : num_machines_(num_machines), jobs_(std::move(jobs)) {
  if (num_machines_ < 1) throw ValidationError("need at least one machine");
  if (jobs_.empty()) throw ValidationError("need at least one job");
  for (const Job& job : jobs_) {
    if (job.time.size() != static_cast<std::size_t>(num_machines_) ||
        job.cost.size() != static_cast<std::size_t>(num_machines_)) {
      throw ValidationError("job '" + job.token +
                            "' needs a time and a cost per machine");
    }
    for (int i = 0; i < num_machines_; ++i) {
      if (job.time[static_cast<std::size_t>(i)].sign() < 0 ||
          job.cost[static_cast<std::size_t>(i)].sign() < 0) {
        throw ValidationError("job '" + job.token +
                              "' has a negative time or cost");
      }
    }
  }
}

ObjectiveVector SchedulingInstance::Evaluate(
    std::span<const int> assignment) const {
  if (assignment.size() != jobs_.size()) {
    throw ContractViolation("assignment has the wrong length");
  }
  Rational cost(1);
  std::vector<Rational> load(static_cast<std::size_t>(num_machines_),
                             Rational(0));
  for (std::size_t j = 0; j < jobs_.size(); ++j) {
    const std::size_t machine = static_cast<std::size_t>(assignment[j]);
    cost += jobs_[j].cost[machine];
    load[machine] += jobs_[j].time[machine];
  }
  Rational makespan(0);
  for (const Rational& l : load) makespan = Max(makespan, l);
  return ObjectiveVector({cost, makespan});
}

std::string AssignmentToken(std::span<const int> assignment) {
  std::string out;
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    if (j > 0) out += ',';
    out += std::to_string(assignment[j] + 1);
  }
  return out;
}

std::optional<std::vector<int>> ParseAssignmentToken(const std::string& token,
                                                     int num_machines,
                                                     std::size_t num_jobs) {
  std::vector<int> out;
  const char* p = token.data();
  const char* end = p + token.size();
  while (p < end) {
    int value = 0;
    const auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || next == p || value < 1 || value > num_machines) {
      return std::nullopt;
    }
    out.push_back(value - 1);
    p = next;
    if (p < end) {
      if (*p != ',' || p + 1 == end) return std::nullopt;
      ++p;
    }
  }
  if (out.size() != num_jobs) return std::nullopt;
  return out;
}

ExplicitInstance EnumerateSchedules(const SchedulingInstance& instance,
                                    int64_t cap) {
  const std::size_t n = instance.jobs().size();
  const int m = instance.num_machines();
  int64_t count = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (count > cap / m) {
      throw UnsupportedOracle("schedule enumeration exceeds the cap of " +
                              std::to_string(cap) + " assignments");
    }
    count *= m;
  }
  std::vector<EvaluatedSolution> points;
  points.reserve(static_cast<std::size_t>(count));
  std::vector<int> assignment(n, 0);
  for (int64_t k = 0; k < count; ++k) {
    ObjectiveVector image = [&] {
      try {
        return instance.Evaluate(assignment);
      } catch (const ContractViolation&) {
        throw ValidationError("schedule " + AssignmentToken(assignment) +
                              " has zero makespan");
      }
    }();
    points.push_back({AssignmentToken(assignment), std::move(image)});
    for (std::size_t j = n; j-- > 0;) {
      if (++assignment[j] < m) break;
      assignment[j] = 0;
    }
  }
  return ExplicitInstance(2, std::move(points));
}

SchedulingProblem::SchedulingProblem(const SchedulingInstance& instance,
                                     int64_t cap)
    : instance_(instance), schedules_(EnumerateSchedules(instance, cap)) {}

int SchedulingProblem::bound_exponent() const {
  return schedules_.bound_exponent();
}

Capabilities SchedulingProblem::capabilities() const {
  Capabilities c = Capabilities::None(2);
  c.constrained[0] = true;
  c.constrained[1] = true;
  return c;
}

OracleAnswer SchedulingProblem::Constrained(
    std::size_t objective, std::span<const Rational> bounds) const {
  return schedules_.Constrained(objective, bounds);
}

std::optional<ObjectiveVector> SchedulingProblem::Evaluate(
    const std::string& token) const {
  const auto assignment = ParseAssignmentToken(
      token, instance_.num_machines(), instance_.jobs().size());
  if (!assignment.has_value()) return std::nullopt;
  return instance_.Evaluate(*assignment);
}

}  // namespace molp
