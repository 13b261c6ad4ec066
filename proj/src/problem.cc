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

#include "molp/problem.h"

#include <utility>

#include "molp/errors.h"

namespace molp {

std::string OracleKindName(OracleKind kind) {
  switch (kind) {
    case OracleKind::kConstrained:
      return "Constrained";
    case OracleKind::kRestrict:
      return "Restrict";
    case OracleKind::kDualRestrict:
      return "DualRestrict";
    case OracleKind::kBoxQuery:
      return "BoxQuery";
  }
  return "Unknown";
}

Capabilities Capabilities::None(std::size_t p) {
  Capabilities c;
  c.constrained.assign(p, false);
  c.restrict.assign(p, false);
  c.dual_restrict.assign(p, false);
  return c;
}

Capabilities Capabilities::All(std::size_t p) {
  Capabilities c;
  c.constrained.assign(p, true);
  c.restrict.assign(p, true);
  c.dual_restrict.assign(p, true);
  c.box_query = true;
  return c;
}

OracleAnswer Problem::Constrained(std::size_t objective,
                                  std::span<const Rational>) const {
  throw UnsupportedOracle("Constrained^" + std::to_string(objective + 1) +
                          " is not available");
}

OracleAnswer Problem::Restrict(std::size_t objective, const Rational&,
                               std::span<const Rational>) const {
  throw UnsupportedOracle("Restrict^" + std::to_string(objective + 1) +
                          " is not available");
}

OracleAnswer Problem::DualRestrict(std::size_t objective, const Rational&,
                                   std::span<const Rational>) const {
  throw UnsupportedOracle("DualRestrict^" + std::to_string(objective + 1) +
                          " is not available");
}

OracleAnswer Problem::MinFirstInBox(std::span<const Rational>,
                                    std::span<const Rational>) const {
  throw UnsupportedOracle("box queries are not available");
}

MaskedProblem::MaskedProblem(const Problem& base, Capabilities mask)
    : base_(base), mask_(std::move(mask)) {
  const Capabilities have = base_.capabilities();
  const std::size_t p = base_.num_objectives();
  if (mask_.constrained.size() != p || mask_.restrict.size() != p ||
      mask_.dual_restrict.size() != p) {
    throw ContractViolation("capability mask has the wrong dimension");
  }
  for (std::size_t i = 0; i < p; ++i) {
    mask_.constrained[i] = mask_.constrained[i] && have.constrained[i];
    mask_.restrict[i] = mask_.restrict[i] && have.restrict[i];
    mask_.dual_restrict[i] = mask_.dual_restrict[i] && have.dual_restrict[i];
  }
  mask_.box_query = mask_.box_query && have.box_query;
}

std::size_t MaskedProblem::num_objectives() const {
  return base_.num_objectives();
}

int MaskedProblem::bound_exponent() const { return base_.bound_exponent(); }

Capabilities MaskedProblem::capabilities() const { return mask_; }

OracleAnswer MaskedProblem::Constrained(
    std::size_t objective, std::span<const Rational> bounds) const {
  if (!mask_.constrained.at(objective)) {
    return Problem::Constrained(objective, bounds);
  }
  return base_.Constrained(objective, bounds);
}

OracleAnswer MaskedProblem::Restrict(std::size_t objective,
                                     const Rational& delta,
                                     std::span<const Rational> bounds) const {
  if (!mask_.restrict.at(objective)) {
    return Problem::Restrict(objective, delta, bounds);
  }
  return base_.Restrict(objective, delta, bounds);
}

OracleAnswer MaskedProblem::DualRestrict(
    std::size_t objective, const Rational& delta,
    std::span<const Rational> bounds) const {
  if (!mask_.dual_restrict.at(objective)) {
    return Problem::DualRestrict(objective, delta, bounds);
  }
  return base_.DualRestrict(objective, delta, bounds);
}

OracleAnswer MaskedProblem::MinFirstInBox(
    std::span<const Rational> lower, std::span<const Rational> upper) const {
  if (!mask_.box_query) return Problem::MinFirstInBox(lower, upper);
  return base_.MinFirstInBox(lower, upper);
}

std::optional<ObjectiveVector> MaskedProblem::Evaluate(
    const std::string& token) const {
  return base_.Evaluate(token);
}

const Rational& BoundFor(std::span<const Rational> bounds, std::size_t i,
                         std::size_t j) {
  if (i == j) throw ContractViolation("no bound on the optimized objective");
  const std::size_t slot = j < i ? j : j - 1;
  if (slot >= bounds.size()) throw ContractViolation("bound index out of range");
  return bounds[slot];
}

Rational RangeLow(int bound_exponent) {
  return Rational::TwoPow(-bound_exponent);
}

Rational RangeHigh(int bound_exponent) {
  return Rational::TwoPow(bound_exponent);
}

Rational Separation(int bound_exponent) {
  return Rational::TwoPow(-2 * static_cast<int64_t>(bound_exponent));
}

}  // namespace molp
