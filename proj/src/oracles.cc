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

#include "molp/oracles.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "molp/errors.h"

namespace molp {

namespace {

std::string JoinBounds(std::span<const Rational> bounds) {
  std::string out;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (i > 0) out += ' ';
    out += bounds[i].ToString();
  }
  return out;
}

// Smallest index in [0, top] for which probe succeeds, assuming probe(top)
// has already succeeded with answer `best`. Success need not be monotone;
// the loop keeps the invariant that probe(lo) failed (or lo = -1) and
// probe(hi) succeeded.
template <typename Probe>
OracleAnswer Bisect(const BigInt& top, OracleAnswer best, Probe probe) {
  BigInt lo = -1;
  BigInt hi = top;
  while (hi - lo > 1) {
    BigInt mid = lo + (hi - lo) / 2;
    OracleAnswer answer = probe(mid);
    if (answer.has_value()) {
      hi = mid;
      best = std::move(answer);
    } else {
      lo = mid;
    }
  }
  return best;
}

// 1 + ceil(log2(top + 1)): the number of probes Bisect plus its top check
// issue on the index range [0, top].
int64_t BisectionCalls(const BigInt& top) {
  const BigInt n = top + 1;
  int64_t c = 0;
  BigInt reach = 1;
  while (reach < n) {
    reach *= 2;
    ++c;
  }
  return c + 1;
}

BigInt RestrictGridTop(int bound_exponent, const Rational& step) {
  const Rational r = Rational(1) + step;
  const Rational span = Rational::TwoPow(2 * int64_t{bound_exponent});
  return BigInt(static_cast<long>(SmallestExponentReaching(r, span)));
}

}  // namespace

std::size_t OracleAudit::Append(AuditRecord record) {
  record.ordinal = records_.size();
  records_.push_back(std::move(record));
  return records_.size() - 1;
}

void OracleAudit::SetAnswer(std::size_t slot, OracleAnswer answer) {
  records_.at(slot).answer = std::move(answer);
}

void OracleAudit::SetNative(std::size_t slot, bool native) {
  records_.at(slot).native = native;
}

void OracleAudit::Merge(const OracleAudit& other, int depth_offset) {
  for (AuditRecord record : other.records_) {
    record.depth += depth_offset;
    Append(std::move(record));
  }
}

std::size_t OracleAudit::Count(OracleKind kind, int depth) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [&](const auto& r) {
        return r.kind == kind && (depth < 0 || r.depth == depth);
      }));
}

std::string OracleAudit::Export() const {
  std::ostringstream out;
  for (const AuditRecord& r : records_) {
    out << OracleKindName(r.kind) << '\t';
    if (r.kind == OracleKind::kBoxQuery) {
      out << '-';
    } else {
      out << r.objective + 1;
    }
    out << '\t' << (r.delta ? r.delta->ToString() : std::string("-")) << '\t'
        << JoinBounds(r.bounds) << '\t'
        << (r.answer ? r.answer->image.ToString() : std::string("NO"))
        << '\n';
  }
  return out.str();
}

OracleSession::OracleSession(const Problem& problem, SessionOptions options)
    : problem_(problem),
      options_(options),
      p_(problem.num_objectives()),
      bound_exponent_(problem.bound_exponent()),
      native_(problem.capabilities()) {
  if (p_ < 2) throw ContractViolation("problems need at least 2 objectives");
  if (bound_exponent_ < 0) {
    throw ContractViolation("bound exponent must be nonnegative");
  }
  if (native_.constrained.size() != p_ || native_.restrict.size() != p_ ||
      native_.dual_restrict.size() != p_) {
    throw ContractViolation("capability vectors have the wrong dimension");
  }
}

OracleAudit OracleSession::TakeAudit() {
  OracleAudit out = std::move(audit_);
  audit_ = OracleAudit();
  return out;
}

OracleSession::Route OracleSession::ConstrainedRoute(
    std::size_t objective) const {
  if (native_.constrained[objective]) return Route::kNative;
  if (options_.allow_reductions && native_.dual_restrict[objective]) {
    return Route::kReduction;
  }
  return Route::kNone;
}

OracleSession::Route OracleSession::RestrictRoute(std::size_t objective) const {
  if (native_.restrict[objective]) return Route::kNative;
  if (!options_.allow_reductions) return Route::kNone;
  if (native_.constrained[objective]) return Route::kViaConstrained;
  if (p_ == 2 && objective == 1 && native_.dual_restrict[0]) {
    return Route::kReduction;
  }
  return Route::kNone;
}

OracleSession::Route OracleSession::DualRestrictRoute(
    std::size_t objective) const {
  if (native_.dual_restrict[objective]) return Route::kNative;
  if (!options_.allow_reductions) return Route::kNone;
  if (native_.constrained[objective]) return Route::kViaConstrained;
  if (p_ == 2 && objective == 0 && native_.restrict[1]) {
    return Route::kReduction;
  }
  return Route::kNone;
}

bool OracleSession::CanConstrained(std::size_t objective) const {
  return objective < p_ && ConstrainedRoute(objective) != Route::kNone;
}

bool OracleSession::CanRestrict(std::size_t objective) const {
  return objective < p_ && RestrictRoute(objective) != Route::kNone;
}

bool OracleSession::CanDualRestrict(std::size_t objective) const {
  return objective < p_ && DualRestrictRoute(objective) != Route::kNone;
}

void OracleSession::CheckBounds(std::size_t objective,
                                std::span<const Rational> bounds) const {
  if (objective >= p_) {
    throw ContractViolation("objective index " + std::to_string(objective) +
                            " out of range");
  }
  if (bounds.size() != p_ - 1) {
    throw ContractViolation("expected " + std::to_string(p_ - 1) +
                            " bounds, got " + std::to_string(bounds.size()));
  }
  for (const Rational& b : bounds) {
    if (b.sign() <= 0) {
      throw ContractViolation("bounds must be positive, got " + b.ToString());
    }
  }
}

std::size_t OracleSession::Open(OracleKind kind, std::size_t objective,
                                const std::optional<Rational>& delta,
                                std::span<const Rational> bounds,
                                bool native) {
  AuditRecord record;
  record.kind = kind;
  record.objective = objective;
  record.delta = delta;
  record.bounds.assign(bounds.begin(), bounds.end());
  record.depth = depth_;
  record.native = native;
  return audit_.Append(std::move(record));
}

void OracleSession::Close(std::size_t slot, const OracleAnswer& answer) {
  if (answer.has_value() && answer->image.size() != p_) {
    throw InvariantViolation("oracle answer has the wrong dimension");
  }
  audit_.SetAnswer(slot, answer);
}

namespace {

// Raises the session depth for the lifetime of a reduction.
class DepthGuard {
 public:
  explicit DepthGuard(int& depth) : depth_(depth) { ++depth_; }
  ~DepthGuard() { --depth_; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

 private:
  int& depth_;
};

}  // namespace

OracleAnswer OracleSession::Constrained(std::size_t objective,
                                        std::span<const Rational> bounds) {
  CheckBounds(objective, bounds);
  const Route route = ConstrainedRoute(objective);
  if (route == Route::kNone) {
    throw UnsupportedOracle("Constrained^" + std::to_string(objective + 1) +
                            " is not available");
  }
  const std::size_t slot = Open(OracleKind::kConstrained, objective,
                                std::nullopt, bounds, route == Route::kNative);
  OracleAnswer answer;
  if (route == Route::kNative) {
    answer = problem_.Constrained(objective, bounds);
  } else {
    DepthGuard guard(depth_);
    answer = ConstrainedViaDualRestrict(*this, objective, bounds);
  }
  Close(slot, answer);
  return answer;
}

OracleAnswer OracleSession::Restrict(std::size_t objective,
                                     const Rational& delta,
                                     std::span<const Rational> bounds) {
  CheckBounds(objective, bounds);
  if (delta.sign() <= 0) throw ContractViolation("delta must be positive");
  const Route route = RestrictRoute(objective);
  if (route == Route::kNone) {
    throw UnsupportedOracle("Restrict^" + std::to_string(objective + 1) +
                            " is not available");
  }
  const std::size_t slot = Open(OracleKind::kRestrict, objective, delta,
                                bounds, route == Route::kNative);
  OracleAnswer answer;
  if (route == Route::kNative) {
    answer = problem_.Restrict(objective, delta, bounds);
  } else if (route == Route::kViaConstrained) {
    answer = problem_.Constrained(objective, bounds);
  } else {
    DepthGuard guard(depth_);
    answer = ReduceRestrict2ViaDualRestrict1(*this, delta, bounds[0]);
  }
  Close(slot, answer);
  return answer;
}

OracleAnswer OracleSession::DualRestrict(std::size_t objective,
                                         const Rational& delta,
                                         std::span<const Rational> bounds) {
  CheckBounds(objective, bounds);
  if (delta.sign() <= 0) throw ContractViolation("delta must be positive");
  const Route route = DualRestrictRoute(objective);
  if (route == Route::kNone) {
    throw UnsupportedOracle("DualRestrict^" + std::to_string(objective + 1) +
                            " is not available");
  }
  const std::size_t slot = Open(OracleKind::kDualRestrict, objective, delta,
                                bounds, route == Route::kNative);
  OracleAnswer answer;
  if (route == Route::kNative) {
    answer = problem_.DualRestrict(objective, delta, bounds);
  } else if (route == Route::kViaConstrained) {
    answer = problem_.Constrained(objective, bounds);
  } else {
    DepthGuard guard(depth_);
    answer = ReduceDualRestrict1ViaRestrict2(*this, delta, bounds[0]);
  }
  Close(slot, answer);
  return answer;
}

OracleAnswer OracleSession::MinFirstInBox(std::span<const Rational> lower,
                                          std::span<const Rational> upper) {
  if (!native_.box_query) {
    throw UnsupportedOracle("box queries are not available");
  }
  if (lower.size() != p_ - 1 || upper.size() != p_ - 1) {
    throw ContractViolation("box corners need p-1 entries");
  }
  std::vector<Rational> corners(lower.begin(), lower.end());
  corners.insert(corners.end(), upper.begin(), upper.end());
  const std::size_t slot =
      Open(OracleKind::kBoxQuery, 0, std::nullopt, corners, true);
  OracleAnswer answer = problem_.MinFirstInBox(lower, upper);
  Close(slot, answer);
  return answer;
}

int64_t DualRestrictReductionCalls(int bound_exponent) {
  const int64_t m = bound_exponent;
  const BigInt top =
      Rational::TwoPow(3 * m).numerator() - Rational::TwoPow(m).numerator();
  return BisectionCalls(top);
}

Rational ReductionStep(const Rational& delta, int64_t denominator_cap) {
  // 1/(8 ceil(1/delta)) always satisfies (1+d)^2 <= 1+delta, so a cap of at
  // least 8 ceil(1/delta) admits a positive d.
  const BigInt floor_den = 8 * delta.Reciprocal().Ceil();
  int64_t cap = denominator_cap;
  if (floor_den.fits_slong_p() && floor_den.get_si() > cap) {
    cap = floor_den.get_si();
  }
  return DeriveDelta(delta, 2, cap).delta;
}

int64_t RestrictReductionCalls(int bound_exponent, const Rational& delta,
                               int64_t denominator_cap) {
  const Rational step = ReductionStep(delta, denominator_cap);
  return BisectionCalls(RestrictGridTop(bound_exponent, step));
}

OracleAnswer ReduceDualRestrict1ViaRestrict2(OracleSession& session,
                                             const Rational& delta,
                                             const Rational& bound2) {
  if (session.num_objectives() != 2) {
    throw UnsupportedOracle("the Restrict binary search needs p = 2");
  }
  if (!session.CanRestrict(1)) {
    throw UnsupportedOracle("Restrict^2 is not available");
  }
  const int m = session.bound_exponent();
  const Rational low = RangeLow(m);
  const Rational g = Separation(m);
  const Rational limit = (Rational(1) + delta) * bound2;
  const BigInt top = Rational::TwoPow(3 * int64_t{m}).numerator() -
                     Rational::TwoPow(m).numerator();

  auto probe = [&](const BigInt& k) -> OracleAnswer {
    const Rational budget = low + Rational(k) * g;
    OracleAnswer x = session.Restrict(1, delta, std::span(&budget, 1));
    if (x.has_value() && x->image[1] <= limit) return x;
    return std::nullopt;
  };
  OracleAnswer best = probe(top);
  if (!best.has_value()) return std::nullopt;
  return Bisect(top, std::move(best), probe);
}

OracleAnswer ReduceRestrict2ViaDualRestrict1(OracleSession& session,
                                             const Rational& delta,
                                             const Rational& bound1) {
  if (session.num_objectives() != 2) {
    throw UnsupportedOracle("the DualRestrict binary search needs p = 2");
  }
  if (!session.CanDualRestrict(0)) {
    throw UnsupportedOracle("DualRestrict^1 is not available");
  }
  const int m = session.bound_exponent();
  const Rational step =
      ReductionStep(delta, session.options().denominator_cap);
  const Rational ratio = Rational(1) + step;
  const Rational low = RangeLow(m);
  const BigInt top = RestrictGridTop(m, step);

  auto probe = [&](const BigInt& k) -> OracleAnswer {
    const Rational budget = low * ratio.Pow(k.get_si());
    OracleAnswer x = session.DualRestrict(0, step, std::span(&budget, 1));
    if (x.has_value() && x->image[0] <= bound1) return x;
    return std::nullopt;
  };
  OracleAnswer best = probe(top);
  if (!best.has_value()) return std::nullopt;
  return Bisect(top, std::move(best), probe);
}

OracleAnswer ConstrainedViaDualRestrict(OracleSession& session,
                                        std::size_t objective,
                                        std::span<const Rational> bounds) {
  const std::size_t p = session.num_objectives();
  if (objective >= p || bounds.size() != p - 1) {
    throw ContractViolation("bad objective index or bound count");
  }
  if (!session.CanDualRestrict(objective)) {
    throw UnsupportedOracle("DualRestrict^" + std::to_string(objective + 1) +
                            " is not available");
  }
  const int m = session.bound_exponent();
  const Rational delta = Rational::TwoPow(-3 * int64_t{m} - 1);
  const Rational g = Separation(m);
  const Rational low = RangeLow(m);
  const Rational high = RangeHigh(m);

  std::vector<Rational> current(bounds.begin(), bounds.end());
  for (Rational& b : current) b = Min(b, high);
  for (std::size_t round = 0; round <= p; ++round) {
    for (const Rational& b : current) {
      if (b < low) return std::nullopt;
    }
    OracleAnswer x = session.DualRestrict(objective, delta, current);
    if (!x.has_value()) return std::nullopt;
    bool snapped = false;
    for (std::size_t j = 0, slot = 0; j < p; ++j) {
      if (j == objective) continue;
      if (x->image[j] > current[slot]) {
        current[slot] = x->image[j] - g;
        snapped = true;
      }
      ++slot;
    }
    if (!snapped) return x;
  }
  throw InvariantViolation(
      "DualRestrict answers kept overshooting; the separation assumption "
      "does not hold for this problem");
}

OracleAnswer DualRestrictViaParetoRoutine(const ParetoRoutine& routine,
                                          const Problem& problem,
                                          const Rational& delta,
                                          std::span<const Rational> bounds) {
  const std::size_t p = problem.num_objectives();
  if (bounds.size() != p - 1) {
    throw ContractViolation("expected p-1 bounds");
  }
  if (delta.sign() <= 0) throw ContractViolation("delta must be positive");
  const std::vector<EvaluatedSolution> set = routine(problem, delta);
  const Rational factor = Rational(1) + delta;
  OracleAnswer best;
  for (const EvaluatedSolution& s : set) {
    bool inside = true;
    for (std::size_t j = 1; j < p && inside; ++j) {
      inside = s.image[j] <= factor * bounds[j - 1];
    }
    if (!inside) continue;
    if (!best.has_value() || s.image[0] < best->image[0] ||
        (s.image[0] == best->image[0] && LexLess(s, *best))) {
      best = s;
    }
  }
  return best;
}

}  // namespace molp
