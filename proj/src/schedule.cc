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

#include "molp/schedule.h"

#include <functional>
#include <string>

#include "molp/errors.h"

namespace molp {

namespace {

struct Fraction {
  BigInt num;
  BigInt den;
};

Fraction Combine(const Fraction& a, const BigInt& t, const Fraction& b) {
  return {a.num + t * b.num, a.den + t * b.den};
}

// Largest t in [0, limit] (limit < 0 means unbounded) for which ok(t) holds,
// given ok(0) holds and ok is monotone (true, ..., true, false, ...).
BigInt LargestTrue(const std::function<bool(const BigInt&)>& ok,
                   const BigInt& limit) {
  const bool bounded = limit >= 0;
  if (bounded && limit == 0) return 0;
  BigInt good = 0;
  BigInt step = 1;
  // Exponential probe for a failing (or out-of-range) upper end.
  BigInt bad;
  for (;;) {
    BigInt probe = good + step;
    if (bounded && probe > limit) {
      if (ok(limit)) return limit;
      bad = limit;
      break;
    }
    if (!ok(probe)) {
      bad = probe;
      break;
    }
    good = probe;
    step *= 2;
  }
  while (bad - good > 1) {
    BigInt mid = (good + bad) / 2;
    if (ok(mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

}  // namespace

EpsilonSchedule DeriveDelta(const Rational& epsilon, int root_order,
                            int64_t denominator_cap) {
  if (epsilon.sign() <= 0) {
    throw InvalidParameter("epsilon must be positive, got " +
                           epsilon.ToString());
  }
  if (root_order < 2 || root_order > 4) {
    throw InvalidParameter("root order must be 2, 3 or 4");
  }
  if (denominator_cap < 1) {
    throw InvalidParameter("denominator cap must be positive");
  }
  const Rational target = Rational(1) + epsilon;
  const auto fits = [&](const Fraction& f) {
    Rational x(f.num, f.den);
    return (Rational(1) + x).Pow(root_order) <= target;
  };
  const BigInt cap(static_cast<long>(denominator_cap));

  // lo satisfies the constraint, hi does not; they stay Farey neighbours.
  Fraction lo{0, 1};
  Fraction hi{1, 0};
  for (;;) {
    const BigInt limit_lo = hi.den == 0 ? BigInt(-1) : (cap - lo.den) / hi.den;
    const BigInt t_lo = LargestTrue(
        [&](const BigInt& t) { return t == 0 || fits(Combine(lo, t, hi)); },
        limit_lo);
    if (t_lo > 0) lo = Combine(lo, t_lo, hi);

    const BigInt limit_hi = (cap - hi.den) / lo.den;
    const BigInt t_hi = LargestTrue(
        [&](const BigInt& t) { return t == 0 || !fits(Combine(hi, t, lo)); },
        limit_hi < 0 ? BigInt(0) : limit_hi);
    if (t_hi > 0) hi = Combine(hi, t_hi, lo);

    if (t_lo == 0 && t_hi == 0) break;
  }
  if (lo.num == 0) {
    throw InvalidParameter("denominator cap " +
                           std::to_string(denominator_cap) +
                           " admits no positive delta for epsilon " +
                           epsilon.ToString());
  }
  EpsilonSchedule schedule;
  schedule.epsilon = epsilon;
  schedule.delta = Rational(lo.num, lo.den);
  schedule.root_order = root_order;
  schedule.effective_epsilon =
      (Rational(1) + schedule.delta).Pow(root_order) - Rational(1);
  return schedule;
}

int64_t SmallestExponentReaching(const Rational& base, const Rational& target) {
  if (base <= Rational(1)) {
    throw InvalidParameter("base must exceed 1, got " + base.ToString());
  }
  int64_t u = 0;
  Rational power(1);
  while (power < target) {
    power *= base;
    ++u;
  }
  return u;
}

PowerTable::PowerTable(const Rational& base, int64_t lo, int64_t hi)
    : lo_(lo), hi_(hi) {
  if (hi < lo) throw InvalidParameter("empty power range");
  powers_.reserve(static_cast<std::size_t>(hi - lo + 1));
  Rational current = base.Pow(lo);
  for (int64_t e = lo; e <= hi; ++e) {
    powers_.push_back(current);
    current *= base;
  }
}

const Rational& PowerTable::operator()(int64_t exponent) const {
  if (exponent < lo_ || exponent > hi_) {
    throw ContractViolation("exponent " + std::to_string(exponent) +
                            " outside cached range");
  }
  return powers_[static_cast<std::size_t>(exponent - lo_)];
}

}  // namespace molp
