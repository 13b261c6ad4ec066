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

#include "molp/verify.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "molp/errors.h"

namespace molp {

std::size_t AuditSummary::Calls(OracleKind kind) const {
  const auto it = by_kind.find(kind);
  return it == by_kind.end() ? 0 : it->second;
}

std::size_t AuditSummary::TopLevelCalls(OracleKind kind) const {
  const auto it = top_level_by_kind.find(kind);
  return it == top_level_by_kind.end() ? 0 : it->second;
}

AuditSummary SummarizeAudit(const OracleAudit& audit) {
  AuditSummary s;
  for (const AuditRecord& r : audit.records()) {
    ++s.total;
    ++s.by_kind[r.kind];
    if (r.depth == 0) ++s.top_level_by_kind[r.kind];
    if (r.delta.has_value()) {
      ++s.by_delta[*r.delta];
      const Rational inverse = r.delta->Reciprocal();
      if (!s.max_inverse_delta.has_value() || inverse > *s.max_inverse_delta) {
        s.max_inverse_delta = inverse;
      }
    }
  }
  return s;
}

std::string VerificationReport::Serialize() const {
  std::ostringstream out;
  out << "verdict=" << (pass ? "pass" : "fail") << '\n';
  out << "set_size=" << set_size << '\n';
  if (minimum_size.has_value()) out << "minimum_size=" << *minimum_size << '\n';
  if (uncovered.has_value()) {
    out << "uncovered=" << uncovered->token << ' ' << uncovered->image.ToString()
        << '\n';
  }
  if (closest_token.has_value()) out << "closest=" << *closest_token << '\n';
  if (!needed_factor.empty()) {
    out << "needed_factor=";
    for (std::size_t i = 0; i < needed_factor.size(); ++i) {
      if (i > 0) out << ' ';
      out << needed_factor[i];
    }
    out << '\n';
  }
  if (audit.has_value()) {
    out << "calls=" << audit->total << '\n';
    for (const auto& [kind, count] : audit->by_kind) {
      out << "calls." << OracleKindName(kind) << '=' << count << '\n';
    }
    if (audit->max_inverse_delta.has_value()) {
      out << "max_inverse_delta=" << *audit->max_inverse_delta << '\n';
    }
  }
  return out.str();
}

VerificationReport VerifyOneExact(std::span<const EvaluatedSolution> set,
                                  const ExplicitInstance& instance,
                                  const ApproxFactor& alpha) {
  const std::size_t p = instance.num_objectives();
  if (alpha.size() != p) {
    throw ContractViolation("approximation factor has the wrong dimension");
  }
  for (const EvaluatedSolution& s : set) {
    const EvaluatedSolution* known = instance.Find(s.token);
    if (known == nullptr) {
      throw ContractViolation("'" + s.token + "' is not a feasible solution");
    }
    if (known->image != s.image) {
      throw ContractViolation("'" + s.token + "' has image " +
                              known->image.ToString() + ", not " +
                              s.image.ToString());
    }
  }
  VerificationReport report;
  report.set_size = set.size();
  for (const EvaluatedSolution& y : instance.points()) {
    const bool covered =
        std::any_of(set.begin(), set.end(), [&](const EvaluatedSolution& x) {
          return AlphaDominates(x.image, y.image, alpha);
        });
    if (covered) continue;
    report.pass = false;
    report.uncovered = y;
    // The member whose worst factor excess is smallest.
    std::optional<Rational> best_excess;
    for (const EvaluatedSolution& x : set) {
      std::vector<Rational> need(p);
      Rational excess(0);
      for (std::size_t i = 0; i < p; ++i) {
        need[i] = x.image[i] / y.image[i];
        excess = Max(excess, need[i] / alpha[i]);
      }
      if (!best_excess.has_value() || excess < *best_excess) {
        best_excess = excess;
        report.closest_token = x.token;
        report.needed_factor = std::move(need);
      }
    }
    break;
  }
  return report;
}

std::vector<EvaluatedSolution> BruteForcePareto(
    const ExplicitInstance& instance) {
  std::vector<EvaluatedSolution> sorted = instance.points();
  std::sort(sorted.begin(), sorted.end(), LexLess);
  std::vector<EvaluatedSolution> out;
  for (const EvaluatedSolution& s : sorted) {
    if (!out.empty() && out.back().image == s.image) continue;
    const bool dominated = std::any_of(
        sorted.begin(), sorted.end(),
        [&](const EvaluatedSolution& t) { return Dominates(t.image, s.image); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

namespace {

using Mask = uint64_t;
inline constexpr std::size_t kMaskBits = 63;

class CoverSearch {
 public:
  CoverSearch(std::vector<Mask> covers, std::size_t n)
      : covers_(std::move(covers)), full_((Mask{1} << n) - 1) {
    for (Mask c : covers_) widest_ = std::max(widest_, std::popcount(c));
  }

  // Smallest-mask cover of exactly `size` sets, if one exists.
  std::optional<Mask> Search(int size) {
    best_.reset();
    Visit(0, 0, size);
    return best_;
  }

 private:
  void Visit(Mask chosen, Mask covered, int left) {
    if (covered == full_) {
      if (!best_.has_value() || chosen < *best_) best_ = chosen;
      return;
    }
    if (left == 0) return;
    const int missing = std::popcount(full_ & ~covered);
    if (widest_ == 0 || (missing + widest_ - 1) / widest_ > left) return;
    const int target = std::countr_zero(full_ & ~covered);
    for (std::size_t a = 0; a < covers_.size(); ++a) {
      const Mask bit = Mask{1} << a;
      if ((chosen & bit) != 0 || (covers_[a] & (Mask{1} << target)) == 0) {
        continue;
      }
      Visit(chosen | bit, covered | covers_[a], left - 1);
    }
  }

  std::vector<Mask> covers_;
  Mask full_;
  int widest_ = 0;
  std::optional<Mask> best_;
};

}  // namespace

MinimumCover ExhaustiveMinCover(const ExplicitInstance& instance,
                                const ApproxFactor& alpha, std::size_t cap) {
  // Points with equal images cover and are covered alike; keep the first.
  std::vector<EvaluatedSolution> points;
  for (const EvaluatedSolution& s : instance.points()) {
    const bool seen = std::any_of(
        points.begin(), points.end(),
        [&](const EvaluatedSolution& t) { return t.image == s.image; });
    if (!seen) points.push_back(s);
  }
  const std::size_t n = points.size();
  const std::size_t limit = std::min(cap, kMaskBits);
  if (n > limit) {
    throw InvalidParameter("exhaustive search is capped at " +
                           std::to_string(limit) + " distinct images, instance has " +
                           std::to_string(n));
  }
  MinimumCover result;
  if (n == 0) return result;
  std::vector<Mask> covers(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (AlphaDominates(points[a].image, points[b].image, alpha)) {
        covers[a] |= Mask{1} << b;
      }
    }
  }
  CoverSearch search(covers, n);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::optional<Mask> mask = search.Search(static_cast<int>(k));
    if (!mask.has_value()) continue;
    result.size = k;
    for (std::size_t a = 0; a < n; ++a) {
      if ((*mask >> a) & 1) result.members.push_back(points[a]);
    }
    return result;
  }
  throw InvariantViolation("the whole instance failed to cover itself");
}

MinimumCover ExhaustiveMinOneExact(const ExplicitInstance& instance,
                                   const Rational& epsilon, std::size_t cap) {
  return ExhaustiveMinCover(
      instance, OneExactAlpha(epsilon, instance.num_objectives()), cap);
}

}  // namespace molp
