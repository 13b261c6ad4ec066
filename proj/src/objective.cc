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

#include "molp/objective.h"

#include <algorithm>
#include <utility>

#include "molp/errors.h"

namespace molp {

ObjectiveVector::ObjectiveVector(std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw ContractViolation("objective vector needs at least 2 entries");
  }
  for (const Rational& v : values_) {
    if (v.sign() <= 0) {
      throw ContractViolation("objective value " + v.ToString() +
                              " is not strictly positive");
    }
  }
}

std::string ObjectiveVector::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ' ';
    out += values_[i].ToString();
  }
  return out;
}

std::strong_ordering operator<=>(const ObjectiveVector& a,
                                 const ObjectiveVector& b) {
  return std::lexicographical_compare_three_way(
      a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end());
}

bool LexLess(const EvaluatedSolution& a, const EvaluatedSolution& b) {
  const auto c = a.image <=> b.image;
  if (c != 0) return c < 0;
  return a.token < b.token;
}

ApproxFactor::ApproxFactor(std::vector<Rational> alphas)
    : alphas_(std::move(alphas)) {
  for (const Rational& a : alphas_) {
    if (a < Rational(1)) {
      throw InvalidParameter("approximation factor " + a.ToString() +
                             " is below 1");
    }
  }
}

ApproxFactor ApproxFactor::Exact(std::size_t p) {
  return ApproxFactor(std::vector<Rational>(p, Rational(1)));
}

ApproxFactor ApproxFactor::Uniform(std::size_t p, const Rational& factor) {
  return ApproxFactor(std::vector<Rational>(p, factor));
}

namespace {

void CheckSameSize(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ContractViolation("dimension mismatch: " + std::to_string(a) +
                            " vs " + std::to_string(b));
  }
}

}  // namespace

bool Dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  CheckSameSize(a.size(), b.size());
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] < a[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

bool AlphaDominates(const ObjectiveVector& a, const ObjectiveVector& b,
                    const ApproxFactor& alpha) {
  CheckSameSize(a.size(), b.size());
  CheckSameSize(a.size(), alpha.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (alpha[i] * b[i] < a[i]) return false;
  }
  return true;
}

ApproxFactor OneExactAlpha(const Rational& epsilon, std::size_t p) {
  if (epsilon.sign() <= 0) {
    throw InvalidParameter("epsilon must be positive, got " +
                           epsilon.ToString());
  }
  if (p < 2) throw InvalidParameter("need at least 2 objectives");
  std::vector<Rational> alphas(p, Rational(1) + epsilon);
  alphas[0] = Rational(1);
  return ApproxFactor(std::move(alphas));
}

}  // namespace molp
