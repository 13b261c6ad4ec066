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

#include "molp/graph_problem.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include "molp/errors.h"

namespace molp {

namespace {

// Largest number of (node, budget) DP states accepted per call.
constexpr int64_t kMaxDpStates = 8'000'000;

BigInt Lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// Drops the cycles of a walk given as edge indices.
std::vector<int> CutCycles(const std::vector<GraphEdge>& edges, int source,
                           const std::vector<int>& walk) {
  std::vector<int> path;
  std::vector<int> nodes = {source};
  for (int e : walk) {
    const int v = edges[static_cast<std::size_t>(e)].to;
    const auto seen = std::find(nodes.begin(), nodes.end(), v);
    if (seen != nodes.end()) {
      const auto keep = seen - nodes.begin();
      nodes.resize(static_cast<std::size_t>(keep) + 1);
      path.resize(static_cast<std::size_t>(keep));
    } else {
      nodes.push_back(v);
      path.push_back(e);
    }
  }
  return path;
}

}  // namespace

GraphInstance::GraphInstance(int num_nodes, int source, int target,
                             std::vector<GraphEdge> edges)
    : num_nodes_(num_nodes),
      source_(source),
      target_(target),
      edges_(std::move(edges)) {
  if (num_nodes_ < 2) throw ValidationError("graphs need at least 2 nodes");
  auto in_range = [&](int v) { return v >= 0 && v < num_nodes_; };
  if (!in_range(source_) || !in_range(target_)) {
    throw ValidationError("source or target out of range");
  }
  if (source_ == target_) throw ValidationError("source equals target");
  Rational lo;
  Rational hi;
  BigInt lcm1 = 1;
  BigInt lcm2 = 1;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const GraphEdge& e = edges_[i];
    if (!in_range(e.from) || !in_range(e.to)) {
      throw ValidationError("edge " + std::to_string(i) +
                            " has an endpoint out of range");
    }
    if (e.cost1.sign() <= 0 || e.cost2.sign() <= 0) {
      throw ValidationError("edge " + std::to_string(i) +
                            " has a nonpositive cost");
    }
    const Rational& small = Min(e.cost1, e.cost2);
    const Rational& large = Max(e.cost1, e.cost2);
    if (i == 0 || small < lo) lo = small;
    if (i == 0 || large > hi) hi = large;
    lcm1 = Lcm(lcm1, e.cost1.denominator());
    lcm2 = Lcm(lcm2, e.cost2.denominator());
  }
  const Rational span = Rational(num_nodes_) * hi;
  const Rational grain(std::max(lcm1, lcm2));
  int m = 1;
  while (!edges_.empty() &&
         (RangeLow(m) > lo || RangeHigh(m) < span ||
          Rational::TwoPow(2 * int64_t{m}) < grain)) {
    ++m;
  }
  bound_exponent_ = m;
}

ShortestPathProblem::ShortestPathProblem(GraphInstance instance,
                                         GraphOptions options)
    : instance_(std::move(instance)), options_(options) {
  if (options_.enumeration_oracles &&
      instance_.num_nodes() > options_.enumeration_node_cap) {
    throw UnsupportedOracle("path enumeration is capped at " +
                            std::to_string(options_.enumeration_node_cap) +
                            " nodes");
  }
}

int ShortestPathProblem::bound_exponent() const {
  return instance_.bound_exponent();
}

Capabilities ShortestPathProblem::capabilities() const {
  Capabilities c = Capabilities::None(2);
  c.dual_restrict[0] = true;
  if (options_.enumeration_oracles) {
    c.constrained[0] = true;
    c.constrained[1] = true;
  }
  return c;
}

EvaluatedSolution ShortestPathProblem::MakeSolution(
    const std::vector<int>& edge_path) const {
  Rational c1(0);
  Rational c2(0);
  for (int e : edge_path) {
    c1 += instance_.edges()[static_cast<std::size_t>(e)].cost1;
    c2 += instance_.edges()[static_cast<std::size_t>(e)].cost2;
  }
  return EvaluatedSolution{PathToken(edge_path), ObjectiveVector({c1, c2})};
}

std::vector<EvaluatedSolution> ShortestPathProblem::EnumeratePaths() const {
  const auto& edges = instance_.edges();
  std::vector<std::vector<int>> out_edges(
      static_cast<std::size_t>(instance_.num_nodes()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out_edges[static_cast<std::size_t>(edges[i].from)].push_back(
        static_cast<int>(i));
  }
  std::vector<EvaluatedSolution> paths;
  std::vector<bool> on_path(static_cast<std::size_t>(instance_.num_nodes()));
  std::vector<int> current;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == instance_.target()) {
      paths.push_back(MakeSolution(current));
      return;
    }
    on_path[static_cast<std::size_t>(v)] = true;
    for (int e : out_edges[static_cast<std::size_t>(v)]) {
      const int w = edges[static_cast<std::size_t>(e)].to;
      if (on_path[static_cast<std::size_t>(w)]) continue;
      current.push_back(e);
      self(self, w);
      current.pop_back();
    }
    on_path[static_cast<std::size_t>(v)] = false;
  };
  dfs(dfs, instance_.source());
  std::sort(paths.begin(), paths.end(),
            [](const auto& a, const auto& b) { return a.token < b.token; });
  return paths;
}

OracleAnswer ShortestPathProblem::Constrained(
    std::size_t objective, std::span<const Rational> bounds) const {
  if (!options_.enumeration_oracles) {
    return Problem::Constrained(objective, bounds);
  }
  if (objective > 1 || bounds.size() != 1) {
    throw ContractViolation("biobjective Constrained takes one bound");
  }
  const std::size_t other = 1 - objective;
  OracleAnswer best;
  for (EvaluatedSolution& s : EnumeratePaths()) {
    if (s.image[other] > bounds[0]) continue;
    if (!best.has_value() || s.image[objective] < best->image[objective] ||
        (s.image[objective] == best->image[objective] && LexLess(s, *best))) {
      best = std::move(s);
    }
  }
  return best;
}

OracleAnswer ShortestPathProblem::DualRestrict(
    std::size_t objective, const Rational& delta,
    std::span<const Rational> bounds) const {
  if (objective != 0) return Problem::DualRestrict(objective, delta, bounds);
  if (bounds.size() != 1) {
    throw ContractViolation("biobjective DualRestrict takes one bound");
  }
  return ShortestPathDualRestrict(*this, delta, bounds[0]);
}

std::optional<ObjectiveVector> ShortestPathProblem::Evaluate(
    const std::string& token) const {
  const std::optional<std::vector<int>> path = ParsePathToken(token);
  if (!path.has_value() || path->empty()) return std::nullopt;
  const auto& edges = instance_.edges();
  std::vector<bool> seen(static_cast<std::size_t>(instance_.num_nodes()));
  int at = instance_.source();
  seen[static_cast<std::size_t>(at)] = true;
  for (int e : *path) {
    if (e < 0 || static_cast<std::size_t>(e) >= edges.size()) {
      return std::nullopt;
    }
    const GraphEdge& edge = edges[static_cast<std::size_t>(e)];
    if (edge.from != at || seen[static_cast<std::size_t>(edge.to)]) {
      return std::nullopt;
    }
    at = edge.to;
    seen[static_cast<std::size_t>(at)] = true;
  }
  if (at != instance_.target()) return std::nullopt;
  return MakeSolution(*path).image;
}

std::optional<std::vector<int>> ShortestPathProblem::MinCost2Path() const {
  const auto& edges = instance_.edges();
  const std::size_t n = static_cast<std::size_t>(instance_.num_nodes());
  std::vector<std::optional<std::pair<Rational, Rational>>> dist(n);
  std::vector<int> via(n, -1);
  std::vector<bool> done(n);
  dist[static_cast<std::size_t>(instance_.source())] =
      std::make_pair(Rational(0), Rational(0));
  for (;;) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v] || !dist[v].has_value()) continue;
      if (pick == n || *dist[v] < *dist[pick]) pick = v;
    }
    if (pick == n) break;
    done[pick] = true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const GraphEdge& e = edges[i];
      if (static_cast<std::size_t>(e.from) != pick) continue;
      const std::size_t w = static_cast<std::size_t>(e.to);
      if (done[w]) continue;
      std::pair<Rational, Rational> cand(dist[pick]->first + e.cost2,
                                         dist[pick]->second + e.cost1);
      if (!dist[w].has_value() || cand < *dist[w]) {
        dist[w] = std::move(cand);
        via[w] = static_cast<int>(i);
      }
    }
  }
  const std::size_t t = static_cast<std::size_t>(instance_.target());
  if (!dist[t].has_value()) return std::nullopt;
  std::vector<int> path;
  for (std::size_t v = t; v != static_cast<std::size_t>(instance_.source());) {
    const int e = via[v];
    path.push_back(e);
    v = static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].from);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

OracleAnswer ShortestPathDualRestrict(const ShortestPathProblem& problem,
                                      const Rational& delta,
                                      const Rational& bound2) {
  if (delta.sign() <= 0 || bound2.sign() <= 0) {
    throw ContractViolation("delta and S_2 must be positive");
  }
  const GraphInstance& g = problem.instance();
  const auto& edges = g.edges();
  const int64_t n = g.num_nodes();
  const BigInt budget_big = (Rational(n) / delta + Rational(n - 1)).Floor();
  if (!budget_big.fits_slong_p() ||
      (budget_big + 1) * n > BigInt(static_cast<long>(kMaxDpStates))) {
    throw InvalidParameter("rounding DP for delta = " + delta.ToString() +
                           " exceeds " + std::to_string(kMaxDpStates) +
                           " states");
  }
  const int64_t budget = budget_big.get_si();
  const Rational scale = Rational(n) / (delta * bound2);
  std::vector<int64_t> weight(edges.size(), -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const BigInt w = (edges[i].cost2 * scale).Ceil();
    if (w <= budget) weight[i] = w.get_si();
  }

  // best[b * n + v]: least c1 of a walk s -> v of scaled c2 exactly b.
  const std::size_t states = static_cast<std::size_t>((budget + 1) * n);
  std::vector<std::optional<Rational>> best(states);
  std::vector<int> via(states, -1);
  auto at = [n](int64_t b, int v) {
    return static_cast<std::size_t>(b * n + v);
  };
  best[at(0, g.source())] = Rational(0);
  std::optional<int64_t> end_budget;
  for (int64_t b = 1; b <= budget; ++b) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int64_t w = weight[i];
      if (w < 0 || w > b) continue;
      const std::optional<Rational>& from = best[at(b - w, edges[i].from)];
      if (!from.has_value()) continue;
      Rational cand = *from + edges[i].cost1;
      std::optional<Rational>& to = best[at(b, edges[i].to)];
      if (!to.has_value() || cand < *to) {
        to = std::move(cand);
        via[at(b, edges[i].to)] = static_cast<int>(i);
      }
    }
    const std::optional<Rational>& reach = best[at(b, g.target())];
    if (reach.has_value() &&
        (!end_budget.has_value() || *reach < *best[at(*end_budget, g.target())])) {
      end_budget = b;
    }
  }

  if (!end_budget.has_value()) {
    const std::optional<std::vector<int>> fallback = problem.MinCost2Path();
    if (!fallback.has_value()) return std::nullopt;
    Rational c2(0);
    for (int e : *fallback) c2 += edges[static_cast<std::size_t>(e)].cost2;
    if (c2 > (Rational(1) + delta) * bound2) return std::nullopt;
    return EvaluatedSolution{PathToken(*fallback),
                             *problem.Evaluate(PathToken(*fallback))};
  }
  std::vector<int> walk;
  int v = g.target();
  for (int64_t b = *end_budget; v != g.source() || b != 0;) {
    const int e = via[at(b, v)];
    walk.push_back(e);
    b -= weight[static_cast<std::size_t>(e)];
    v = edges[static_cast<std::size_t>(e)].from;
  }
  std::reverse(walk.begin(), walk.end());
  const std::vector<int> path = CutCycles(edges, g.source(), walk);
  const std::string token = PathToken(path);
  return EvaluatedSolution{token, *problem.Evaluate(token)};
}

std::string PathToken(std::span<const int> edge_path) {
  std::string out;
  for (std::size_t i = 0; i < edge_path.size(); ++i) {
    if (i > 0) out += '-';
    out += 'e';
    out += std::to_string(edge_path[i]);
  }
  return out;
}

std::optional<std::vector<int>> ParsePathToken(const std::string& token) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < token.size()) {
    if (token[pos] != 'e') return std::nullopt;
    ++pos;
    int value = 0;
    const char* begin = token.data() + pos;
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) return std::nullopt;
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - token.data());
    if (pos < token.size()) {
      if (token[pos] != '-') return std::nullopt;
      ++pos;
      if (pos == token.size()) return std::nullopt;
    }
  }
  return out;
}

}  // namespace molp
