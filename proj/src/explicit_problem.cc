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

#include "molp/explicit_problem.h"

#include <algorithm>
#include <utility>

#include "molp/errors.h"

namespace molp {

namespace {

// Largest M >= 1 ever tried when searching for the smallest valid exponent.
constexpr int kMaxBoundExponent = 1 << 16;

bool MeetsBounds(const ObjectiveVector& v, std::size_t objective,
                 std::span<const Rational> bounds, const Rational& scale) {
  for (std::size_t j = 0, slot = 0; j < v.size(); ++j) {
    if (j == objective) continue;
    if (v[j] > scale * bounds[slot]) return false;
    ++slot;
  }
  return true;
}

// Minimizer of f_i; ties by image, then token.
const EvaluatedSolution* ArgMin(
    std::span<const EvaluatedSolution* const> candidates,
    std::size_t objective) {
  const EvaluatedSolution* best = nullptr;
  for (const EvaluatedSolution* c : candidates) {
    if (best == nullptr || c->image[objective] < best->image[objective] ||
        (c->image[objective] == best->image[objective] && LexLess(*c, *best))) {
      best = c;
    }
  }
  return best;
}

void CheckBoundCount(std::size_t p, std::size_t objective,
                     std::span<const Rational> bounds) {
  if (objective >= p) throw ContractViolation("objective index out of range");
  if (bounds.size() != p - 1) {
    throw ContractViolation("expected " + std::to_string(p - 1) + " bounds");
  }
}

}  // namespace

ExplicitInstance::ExplicitInstance(std::size_t p,
                                   std::vector<EvaluatedSolution> points,
                                   std::optional<int> declared_bound_exponent)
    : p_(p), points_(std::move(points)) {
  if (p_ < 2) throw ValidationError("explicit instances need p >= 2");
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const EvaluatedSolution& s = points_[k];
    if (s.image.size() != p_) {
      throw ValidationError("point '" + s.token + "' has " +
                            std::to_string(s.image.size()) +
                            " values, expected " + std::to_string(p_));
    }
    if (s.token.empty() ||
        s.token.find_first_of(" \t\r\n") != std::string::npos) {
      throw ValidationError("tokens must be nonempty and contain no spaces");
    }
    if (!by_token_.emplace(s.token, k).second) {
      throw ValidationError("duplicate token '" + s.token + "'");
    }
  }
  if (declared_bound_exponent.has_value()) {
    if (*declared_bound_exponent < 1) {
      throw ValidationError("declared bound exponent must be at least 1");
    }
    const std::string problem =
        CheckBoundExponent(p_, points_, *declared_bound_exponent);
    if (!problem.empty()) {
      throw ValidationError("bound exponent " +
                            std::to_string(*declared_bound_exponent) + ": " +
                            problem);
    }
    bound_exponent_ = *declared_bound_exponent;
  } else {
    bound_exponent_ = SmallestBoundExponent(p_, points_);
  }
}

const EvaluatedSolution* ExplicitInstance::Find(
    const std::string& token) const {
  const auto it = by_token_.find(token);
  return it == by_token_.end() ? nullptr : &points_[it->second];
}

std::string ExplicitInstance::CheckBoundExponent(
    std::size_t p, std::span<const EvaluatedSolution> points, int m) {
  const Rational low = RangeLow(m);
  const Rational high = RangeHigh(m);
  const Rational gap = Separation(m);
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Rational> values;
    values.reserve(points.size());
    for (const EvaluatedSolution& s : points) {
      const Rational& v = s.image[i];
      if (v < low || v > high) {
        return "value " + v.ToString() + " of '" + s.token +
               "' lies outside [" + low.ToString() + ", " + high.ToString() +
               "]";
      }
      values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    for (std::size_t k = 1; k < values.size(); ++k) {
      if (values[k] != values[k - 1] && values[k] - values[k - 1] < gap) {
        return "objective " + std::to_string(i + 1) + " values " +
               values[k - 1].ToString() + " and " + values[k].ToString() +
               " are closer than " + gap.ToString();
      }
    }
  }
  return "";
}

int ExplicitInstance::SmallestBoundExponent(
    std::size_t p, std::span<const EvaluatedSolution> points) {
  if (points.empty()) return 1;
  Rational lo = points[0].image[0];
  Rational hi = lo;
  std::optional<Rational> min_gap;
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Rational> values;
    for (const EvaluatedSolution& s : points) values.push_back(s.image[i]);
    std::sort(values.begin(), values.end());
    lo = Min(lo, values.front());
    hi = Max(hi, values.back());
    for (std::size_t k = 1; k < values.size(); ++k) {
      if (values[k] == values[k - 1]) continue;
      const Rational d = values[k] - values[k - 1];
      if (!min_gap.has_value() || d < *min_gap) min_gap = d;
    }
  }
  int m = 1;
  while (m <= kMaxBoundExponent) {
    if (RangeLow(m) <= lo && RangeHigh(m) >= hi &&
        (!min_gap.has_value() || Separation(m) <= *min_gap)) {
      return m;
    }
    ++m;
  }
  throw ValidationError("no bound exponent up to " +
                        std::to_string(kMaxBoundExponent) + " fits the data");
}

ExplicitProblem::ExplicitProblem(ExplicitInstance instance,
                                 ExplicitOptions options)
    : instance_(std::move(instance)), options_(options) {}

std::size_t ExplicitProblem::num_objectives() const {
  return instance_.num_objectives();
}

int ExplicitProblem::bound_exponent() const {
  return instance_.bound_exponent();
}

Capabilities ExplicitProblem::capabilities() const {
  return Capabilities::All(instance_.num_objectives());
}

std::vector<const EvaluatedSolution*> ExplicitProblem::Within(
    std::size_t objective, std::span<const Rational> bounds,
    const Rational& scale) const {
  std::vector<const EvaluatedSolution*> out;
  for (const EvaluatedSolution& s : instance_.points()) {
    if (MeetsBounds(s.image, objective, bounds, scale)) out.push_back(&s);
  }
  return out;
}

OracleAnswer ExplicitProblem::Constrained(
    std::size_t objective, std::span<const Rational> bounds) const {
  CheckBoundCount(num_objectives(), objective, bounds);
  const auto candidates = Within(objective, bounds, Rational(1));
  const EvaluatedSolution* best = ArgMin(candidates, objective);
  if (best == nullptr) return std::nullopt;
  return *best;
}

OracleAnswer ExplicitProblem::Restrict(std::size_t objective,
                                       const Rational& delta,
                                       std::span<const Rational> bounds) const {
  CheckBoundCount(num_objectives(), objective, bounds);
  if (options_.restrict_policy == AnswerPolicy::kBest) {
    return Constrained(objective, bounds);
  }
  const auto candidates = Within(objective, bounds, Rational(1));
  const EvaluatedSolution* best = ArgMin(candidates, objective);
  if (best == nullptr) return std::nullopt;
  const Rational ceiling = (Rational(1) + delta) * best->image[objective];
  const EvaluatedSolution* worst = nullptr;
  for (const EvaluatedSolution* c : candidates) {
    if (c->image[objective] > ceiling) continue;
    if (worst == nullptr || c->image[objective] > worst->image[objective] ||
        (c->image[objective] == worst->image[objective] && LexLess(*worst, *c))) {
      worst = c;
    }
  }
  return *worst;
}

OracleAnswer ExplicitProblem::DualRestrict(
    std::size_t objective, const Rational& delta,
    std::span<const Rational> bounds) const {
  CheckBoundCount(num_objectives(), objective, bounds);
  const Rational relax = Rational(1) + delta;
  if (options_.dual_restrict_policy == AnswerPolicy::kBest) {
    const auto candidates = Within(objective, bounds, relax);
    const EvaluatedSolution* best = ArgMin(candidates, objective);
    if (best == nullptr) return std::nullopt;
    return *best;
  }
  const auto strict = Within(objective, bounds, Rational(1));
  const EvaluatedSolution* opt = ArgMin(strict, objective);
  if (opt == nullptr) return std::nullopt;
  // Among relaxed-feasible points with f_i <= opt_i(S), the one whose
  // relaxed objectives are lexicographically largest.
  const EvaluatedSolution* pick = nullptr;
  for (const EvaluatedSolution* c : Within(objective, bounds, relax)) {
    if (c->image[objective] > opt->image[objective]) continue;
    if (pick == nullptr || LexLess(*pick, *c)) pick = c;
  }
  return *pick;
}

OracleAnswer ExplicitProblem::MinFirstInBox(
    std::span<const Rational> lower, std::span<const Rational> upper) const {
  const std::size_t p = num_objectives();
  if (lower.size() != p - 1 || upper.size() != p - 1) {
    throw ContractViolation("box corners need p-1 entries");
  }
  std::vector<const EvaluatedSolution*> inside;
  for (const EvaluatedSolution& s : instance_.points()) {
    bool ok = true;
    for (std::size_t j = 1; j < p && ok; ++j) {
      ok = lower[j - 1] <= s.image[j] && s.image[j] <= upper[j - 1];
    }
    if (ok) inside.push_back(&s);
  }
  const EvaluatedSolution* best = ArgMin(inside, 0);
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::optional<ObjectiveVector> ExplicitProblem::Evaluate(
    const std::string& token) const {
  const EvaluatedSolution* s = instance_.Find(token);
  if (s == nullptr) return std::nullopt;
  return s->image;
}

std::optional<Rational> BruteForceOpt(const ExplicitInstance& instance,
                                      std::size_t objective,
                                      std::span<const Rational> bounds) {
  CheckBoundCount(instance.num_objectives(), objective, bounds);
  std::optional<Rational> best;
  for (const EvaluatedSolution& s : instance.points()) {
    if (!MeetsBounds(s.image, objective, bounds, Rational(1))) continue;
    if (!best.has_value() || s.image[objective] < *best) {
      best = s.image[objective];
    }
  }
  return best;
}

}  // namespace molp
