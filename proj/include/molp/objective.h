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

// Objective-space vocabulary: images of feasible solutions, approximation
// factors and the two dominance relations used throughout the library. All
// objectives are minimized.

#ifndef MOLP_OBJECTIVE_H_
#define MOLP_OBJECTIVE_H_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "molp/rational.h"

namespace molp {

// A point in Q^p with p >= 2 and strictly positive entries.
class ObjectiveVector {
 public:
  // Throws ContractViolation when p < 2 or an entry is not positive.
  explicit ObjectiveVector(std::vector<Rational> values);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Rational> values() const { return values_; }

  // Space-separated rational text.
  std::string ToString() const;

  friend bool operator==(const ObjectiveVector&,
                         const ObjectiveVector&) = default;
  // Lexicographic; used for deterministic tie-breaking.
  friend std::strong_ordering operator<=>(const ObjectiveVector& a,
                                          const ObjectiveVector& b);

 private:
  std::vector<Rational> values_;
};

// A feasible solution: an opaque adapter-defined token and its image.
struct EvaluatedSolution {
  std::string token;
  ObjectiveVector image;

  friend bool operator==(const EvaluatedSolution&,
                         const EvaluatedSolution&) = default;
};

// Orders by image lexicographically, then by token.
bool LexLess(const EvaluatedSolution& a, const EvaluatedSolution& b);

// Per-objective approximation factors, each >= 1.
class ApproxFactor {
 public:
  explicit ApproxFactor(std::vector<Rational> alphas);

  std::size_t size() const { return alphas_.size(); }
  const Rational& operator[](std::size_t i) const { return alphas_[i]; }
  std::span<const Rational> alphas() const { return alphas_; }

  // (1, ..., 1).
  static ApproxFactor Exact(std::size_t p);
  // (f, ..., f).
  static ApproxFactor Uniform(std::size_t p, const Rational& factor);

 private:
  std::vector<Rational> alphas_;
};

// a_i <= b_i for every i, with at least one strict inequality.
bool Dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// a_i <= alpha_i * b_i for every i.
bool AlphaDominates(const ObjectiveVector& a, const ObjectiveVector& b,
                    const ApproxFactor& alpha);

// (1, 1+eps, ..., 1+eps) of length p. Throws InvalidParameter if eps <= 0
// or p < 2.
ApproxFactor OneExactAlpha(const Rational& epsilon, std::size_t p);

}  // namespace molp

#endif  // MOLP_OBJECTIVE_H_
