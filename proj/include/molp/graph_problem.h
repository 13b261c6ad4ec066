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

// Biobjective shortest s-t paths in a digraph with two positive costs per
// edge. Solutions are simple paths, written as edge-index tokens such as
// "e0-e3-e7" (parallel edges make node sequences ambiguous).

#ifndef MOLP_GRAPH_PROBLEM_H_
#define MOLP_GRAPH_PROBLEM_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "molp/objective.h"
#include "molp/problem.h"
#include "molp/rational.h"

namespace molp {

struct GraphEdge {
  int from = 0;
  int to = 0;
  Rational cost1;
  Rational cost2;
};

// Nodes are 0..num_nodes-1.
class GraphInstance {
 public:
  GraphInstance(int num_nodes, int source, int target,
                std::vector<GraphEdge> edges);

  int num_nodes() const { return num_nodes_; }
  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  // Smallest m >= 1 with every edge cost >= 2^-m, n * (largest edge cost)
  // <= 2^m, and 2^2m >= the lcm of the cost denominators of each objective.
  // Path costs are multiples of 1/lcm, so distinct path costs are at least
  // 2^-2m apart.
  int bound_exponent() const { return bound_exponent_; }

 private:
  int num_nodes_;
  int source_;
  int target_;
  std::vector<GraphEdge> edges_;
  int bound_exponent_ = 1;
};

struct GraphOptions {
  // Expose exact Constrained^1 and Constrained^2 by enumerating all simple
  // s-t paths. Meant for small test graphs.
  bool enumeration_oracles = false;
  int enumeration_node_cap = 12;
};

class ShortestPathProblem final : public Problem {
 public:
  explicit ShortestPathProblem(GraphInstance instance,
                               GraphOptions options = {});

  const GraphInstance& instance() const { return instance_; }

  std::size_t num_objectives() const override { return 2; }
  int bound_exponent() const override;
  Capabilities capabilities() const override;
  OracleAnswer Constrained(std::size_t objective,
                           std::span<const Rational> bounds) const override;
  OracleAnswer DualRestrict(std::size_t objective, const Rational& delta,
                            std::span<const Rational> bounds) const override;
  std::optional<ObjectiveVector> Evaluate(
      const std::string& token) const override;

  // Every simple s-t path with its image, sorted by token.
  std::vector<EvaluatedSolution> EnumeratePaths() const;

  // Path of minimum c2 (ties by c1), via Dijkstra; nullopt if the target is
  // unreachable.
  std::optional<std::vector<int>> MinCost2Path() const;

 private:
  EvaluatedSolution MakeSolution(const std::vector<int>& edge_path) const;

  GraphInstance instance_;
  GraphOptions options_;
};

// DualRestrict^1_delta(S_2) by budget rounding: c2 is scaled to
// ceil(c2 n / (delta S_2)) and a dynamic program over (node, scaled budget
// <= floor(n/delta + n - 1)) minimizes c1. Every path with c2 <= S_2 fits
// the budget, and every walk that fits has c2 < (1+delta) S_2. The best walk
// is shortened to a simple path by cutting cycles. When no walk fits, the
// minimum-c2 path is returned if its c2 is at most (1+delta) S_2 (then no
// path meets S_2, so any such path is a valid answer), and NO otherwise.
OracleAnswer ShortestPathDualRestrict(const ShortestPathProblem& problem,
                                      const Rational& delta,
                                      const Rational& bound2);

// Edge-index token "e<i>-e<j>-..." for a path, and its inverse.
std::string PathToken(std::span<const int> edge_path);
std::optional<std::vector<int>> ParsePathToken(const std::string& token);

}  // namespace molp

#endif  // MOLP_GRAPH_PROBLEM_H_
