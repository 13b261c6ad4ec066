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

#include "molp/algorithms.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <set>
#include <thread>
#include <utility>

#include "molp/errors.h"

namespace molp {

namespace {

SessionOptions MakeSessionOptions(const AlgorithmOptions& options) {
  SessionOptions s;
  s.allow_reductions = options.allow_reductions;
  s.denominator_cap = options.denominator_cap;
  return s;
}

void RequireBiobjective(const Problem& problem, const char* name) {
  if (problem.num_objectives() != 2) {
    throw UnsupportedOracle(std::string(name) +
                            " handles biobjective problems only");
  }
}

void RequireEpsilon(const Rational& epsilon) {
  if (epsilon.sign() <= 0) {
    throw InvalidParameter("epsilon must be positive, got " +
                           epsilon.ToString());
  }
}

// Insertion-ordered set keyed by token.
class SolutionSet {
 public:
  void Add(const EvaluatedSolution& s) {
    if (tokens_.insert(s.token).second) items_.push_back(s);
  }
  const std::vector<EvaluatedSolution>& items() const { return items_; }
  std::vector<EvaluatedSolution> Take() { return std::move(items_); }

 private:
  std::set<std::string> tokens_;
  std::vector<EvaluatedSolution> items_;
};

void Finish(ParetoRunResult& result, SolutionSet& set,
            const AlgorithmOptions& options) {
  result.set = set.Take();
  if (options.filter_dominated) result.set = FilterDominated(result.set);
}

void Check(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace

std::string AdaptivePhaseName(AdaptivePhase phase) {
  switch (phase) {
    case AdaptivePhase::kProbe:
      return "Probe";
    case AdaptivePhase::kDescend:
      return "Descend";
    case AdaptivePhase::kCommit:
      return "Commit";
    case AdaptivePhase::kDone:
      return "Done";
  }
  return "Unknown";
}

int64_t GridSide(const Rational& delta, int bound_exponent) {
  return 2 * SmallestExponentReaching(Rational(1) + delta,
                                      RangeHigh(bound_exponent));
}

int64_t AdaptiveCallCeiling(const Rational& delta, int bound_exponent) {
  return SmallestExponentReaching(
             Rational(1) + delta,
             Rational::TwoPow(2 * int64_t{bound_exponent})) +
         2;
}

std::vector<EvaluatedSolution> FilterDominated(
    const std::vector<EvaluatedSolution>& set) {
  std::vector<EvaluatedSolution> out;
  for (const EvaluatedSolution& s : set) {
    const bool dominated =
        std::any_of(set.begin(), set.end(), [&](const EvaluatedSolution& t) {
          return Dominates(t.image, s.image);
        });
    if (!dominated) out.push_back(s);
  }
  return out;
}

ParetoRunResult ExistenceCover(const Problem& problem, const Rational& epsilon,
                               const AlgorithmOptions& options) {
  RequireEpsilon(epsilon);
  OracleSession session(problem, MakeSessionOptions(options));
  if (!session.native().box_query) {
    throw UnsupportedOracle("the existence cover needs box queries");
  }
  const std::size_t p = problem.num_objectives();
  const int m = problem.bound_exponent();
  const Rational ratio = Rational(1) + epsilon;
  const int64_t u = SmallestExponentReaching(ratio, RangeHigh(m));
  const PowerTable powers(ratio, -u, u);

  ParetoRunResult result;
  SolutionSet chosen;
  std::vector<int64_t> index(p - 1, -u);
  std::vector<Rational> lower(p - 1), upper(p - 1);
  for (;;) {
    for (std::size_t j = 0; j + 1 < p; ++j) {
      lower[j] = powers(index[j]);
      upper[j] = powers(index[j] + 1);
    }
    ++result.stats.stripes_visited;
    OracleAnswer x = session.MinFirstInBox(lower, upper);
    if (x.has_value()) chosen.Add(*x);
    // Odometer over {-u, ..., u-1}^(p-1), last coordinate fastest.
    std::size_t k = p - 1;
    while (k > 0 && index[k - 1] == u - 1) {
      index[k - 1] = -u;
      --k;
    }
    if (k == 0) break;
    ++index[k - 1];
  }
  // Points dominated by other chosen points are never needed.
  std::vector<EvaluatedSolution> kept = chosen.Take();
  if (options.filter_dominated) kept = FilterDominated(kept);
  result.set = std::move(kept);
  result.audit = session.TakeAudit();
  return result;
}

ParetoRunResult GridAlgorithm(const Problem& problem, const Rational& epsilon,
                              const AlgorithmOptions& options) {
  RequireEpsilon(epsilon);
  const EpsilonSchedule schedule =
      DeriveDelta(epsilon, 2, options.denominator_cap);
  const std::size_t p = problem.num_objectives();
  const int m = problem.bound_exponent();
  const Rational& delta = schedule.delta;
  const int64_t side = GridSide(delta, m);
  const int64_t u = side / 2;
  const PowerTable powers(Rational(1) + delta, -u + 1, u);

  int64_t cells = 1;
  for (std::size_t j = 0; j + 1 < p; ++j) {
    if (cells > (int64_t{1} << 40) / side) {
      throw InvalidParameter("grid has too many cells");
    }
    cells *= side;
  }
  const SessionOptions session_options = MakeSessionOptions(options);
  {
    OracleSession probe(problem, session_options);
    if (!probe.CanDualRestrict(0)) {
      throw UnsupportedOracle("the grid algorithm needs DualRestrict^1");
    }
  }

  // Cell c maps to exponents (i_2, ..., i_p), i_2 most significant.
  auto bounds_of = [&](int64_t c) {
    std::vector<Rational> bounds(p - 1);
    for (std::size_t j = p - 1; j-- > 0;) {
      bounds[j] = powers(c % side - u + 1);
      c /= side;
    }
    return bounds;
  };
  auto solve_range = [&](int64_t lo, int64_t hi, OracleSession& session,
                         std::vector<OracleAnswer>& answers) {
    for (int64_t c = lo; c < hi; ++c) {
      answers[static_cast<std::size_t>(c)] =
          session.DualRestrict(0, delta, bounds_of(c));
    }
  };

  ParetoRunResult result;
  result.schedule = schedule;
  std::vector<OracleAnswer> answers(static_cast<std::size_t>(cells));
  int threads = 1;
  if (options.parallel_grid) {
    threads = options.grid_threads > 0
                  ? options.grid_threads
                  : static_cast<int>(std::max(1u,
                                              std::thread::hardware_concurrency()));
    threads = static_cast<int>(std::min<int64_t>(threads, cells));
  }
  if (threads <= 1) {
    OracleSession session(problem, session_options);
    solve_range(0, cells, session, answers);
    result.audit = session.TakeAudit();
  } else {
    std::vector<std::unique_ptr<OracleSession>> sessions;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t) {
      sessions.push_back(
          std::make_unique<OracleSession>(problem, session_options));
    }
    for (int t = 0; t < threads; ++t) {
      const int64_t lo = cells * t / threads;
      const int64_t hi = cells * (t + 1) / threads;
      workers.emplace_back([&, t, lo, hi] {
        try {
          solve_range(lo, hi, *sessions[static_cast<std::size_t>(t)], answers);
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
    for (std::thread& w : workers) w.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (const auto& s : sessions) result.audit.Merge(s->audit());
  }
  result.stats.stripes_visited = cells;

  SolutionSet chosen;
  for (const OracleAnswer& a : answers) {
    if (a.has_value()) chosen.Add(*a);
  }
  Finish(result, chosen, options);
  return result;
}

ParetoRunResult AdaptiveAlgorithm(const Problem& problem,
                                  const Rational& epsilon,
                                  const AlgorithmOptions& options) {
  RequireBiobjective(problem, "the adaptive algorithm");
  RequireEpsilon(epsilon);
  const EpsilonSchedule schedule =
      DeriveDelta(epsilon, 4, options.denominator_cap);
  OracleSession session(problem, MakeSessionOptions(options));
  if (!session.CanDualRestrict(0)) {
    throw UnsupportedOracle("the adaptive algorithm needs DualRestrict^1");
  }
  const Rational& delta = schedule.delta;
  const Rational step = Rational(1) + delta;
  const Rational step2 = step * step;
  const Rational step3 = step2 * step;
  const Rational big_step = Rational(1) + schedule.effective_epsilon;
  const bool checks = options.assert_lemma2;

  ParetoRunResult result;
  result.schedule = schedule;
  std::vector<EvaluatedSolution> committed;
  Rational bound2 = RangeHigh(problem.bound_exponent());
  auto set_bound = [&](const Rational& value) {
    if (checks) {
      Check(value <= bound2 / step,
            "S_2 update from " + bound2.ToString() + " to " + value.ToString() +
                " shrinks by less than 1+delta");
    }
    bound2 = value;
    ++result.stats.bound_updates;
  };
  auto dual_restrict = [&]() {
    return session.DualRestrict(0, delta, std::span(&bound2, 1));
  };
  auto commit = [&](const EvaluatedSolution& s) {
    if (std::none_of(committed.begin(), committed.end(),
                     [&](const auto& c) { return c.token == s.token; })) {
      committed.push_back(s);
    }
  };

  OracleAnswer x;
  OracleAnswer next;
  AdaptivePhase phase = AdaptivePhase::kProbe;
  while (phase != AdaptivePhase::kDone) {
    result.stats.phase_trace.push_back(phase);
    switch (phase) {
      case AdaptivePhase::kProbe: {
        ++result.stats.loop_iterations;
        x = dual_restrict();
        if (!x.has_value()) {
          phase = AdaptivePhase::kDone;
          break;
        }
        set_bound(x->image[1] / step2);
        next = dual_restrict();
        if (!next.has_value()) {
          commit(*x);
          phase = AdaptivePhase::kDone;
          break;
        }
        phase = AdaptivePhase::kDescend;
        break;
      }
      case AdaptivePhase::kDescend: {
        if (checks) {
          Check(x.has_value() && next.has_value(),
                "run-state check (a): NO answer");
          Check(bound2 == x->image[1] / step2,
                "run-state check (b): S_2 differs from f_2(x)/(1+delta)^2");
          Check(next->image[1] <= x->image[1] / step,
                "run-state check (d): f_2(next) exceeds f_2(x)/(1+delta)");
          Check(next->image[0] >= x->image[0],
                "run-state check (e): f_1(next) below f_1(x)");
          if (!committed.empty()) {
            Rational lowest = committed.front().image[1];
            for (const auto& c : committed) lowest = Min(lowest, c.image[1]);
            Check(x->image[1] <= lowest / step3,
                  "run-state check (g): f_2(x) not (1+delta)^3 below P");
          }
        }
        if (options.checkpoint_observer) {
          options.checkpoint_observer(
              AdaptiveCheckpoint{*x, *next, bound2, committed, schedule});
        }
        if (next->image[0] != x->image[0]) {
          phase = AdaptivePhase::kCommit;
          break;
        }
        ++result.stats.loop_iterations;
        x = std::move(next);
        set_bound(x->image[1] / step2);
        next = dual_restrict();
        if (!next.has_value()) {
          commit(*x);
          phase = AdaptivePhase::kDone;
        }
        break;
      }
      case AdaptivePhase::kCommit: {
        commit(*x);
        set_bound(x->image[1] / big_step);
        phase = AdaptivePhase::kProbe;
        break;
      }
      case AdaptivePhase::kDone:
        break;
    }
  }
  result.stats.phase_trace.push_back(AdaptivePhase::kDone);

  if (checks) {
    for (std::size_t a = 0; a < committed.size(); ++a) {
      for (std::size_t b = a + 1; b < committed.size(); ++b) {
        const Rational& hi = Max(committed[a].image[1], committed[b].image[1]);
        const Rational& lo = Min(committed[a].image[1], committed[b].image[1]);
        Check(hi >= step3 * lo,
              "output spacing: two outputs closer than (1+delta)^3 in f_2");
      }
    }
  }
  SolutionSet out;
  for (const auto& c : committed) out.Add(c);
  result.audit = session.TakeAudit();
  Finish(result, out, options);
  return result;
}

ParetoRunResult DyAlgorithm(const Problem& problem, const Rational& epsilon,
                            const AlgorithmOptions& options) {
  RequireBiobjective(problem, "the DY algorithm");
  RequireEpsilon(epsilon);
  OracleSession session(problem, MakeSessionOptions(options));
  if (!session.CanDualRestrict(0) || !session.CanRestrict(1)) {
    throw UnsupportedOracle(
        "the DY algorithm needs DualRestrict^1 and Restrict^2");
  }
  const int m = problem.bound_exponent();
  const Rational top = RangeHigh(m);
  const Rational gap = Separation(m);
  const Rational one(1);

  ParetoRunResult result;
  auto restrict2 = [&](const Rational& d, const Rational& b) {
    return session.Restrict(1, d, std::span(&b, 1));
  };
  auto dual_restrict1 = [&](const Rational& d, const Rational& s) {
    return session.DualRestrict(0, d, std::span(&s, 1));
  };

  const EpsilonSchedule schedule =
      DeriveDelta(epsilon, 3, options.denominator_cap);
  result.schedule = schedule;
  if (!restrict2(one, top).has_value()) {
    result.audit = session.TakeAudit();
    return result;
  }
  const Rational& delta = schedule.delta;
  const Rational step = one + delta;
  const Rational growth = (one + schedule.effective_epsilon) / step;

  const OracleAnswer left = dual_restrict1(one, top);
  Check(left.has_value(), "DualRestrict^1_1(2^M) answered NO on a feasible "
                          "problem");
  OracleAnswer tilde = restrict2(delta, top);
  Check(tilde.has_value(), "Restrict^2(2^M) answered NO on a feasible problem");
  Rational bound2 = step * tilde->image[1];
  OracleAnswer x = dual_restrict1(delta, bound2);
  Check(x.has_value(), "DualRestrict^1 answered NO above a feasible point");
  Rational bound1 = x->image[0] - gap;
  SolutionSet chosen;
  chosen.Add(*x);
  while (bound1 >= left->image[0]) {
    ++result.stats.loop_iterations;
    tilde = restrict2(delta, bound1);
    Check(tilde.has_value(), "Restrict^2 answered NO above f_1(x_left)");
    bound2 = growth * Max(bound2, tilde->image[1] / step);
    ++result.stats.bound_updates;
    x = dual_restrict1(delta, bound2);
    Check(x.has_value() && x->image[0] <= bound1,
          "DualRestrict^1 made no progress in f_1");
    bound1 = x->image[0] - gap;
    chosen.Add(*x);
  }
  result.audit = session.TakeAudit();
  Finish(result, chosen, options);
  return result;
}

ParetoRunResult GreedyMinAlgorithm(const Problem& problem,
                                   const Rational& epsilon,
                                   const AlgorithmOptions& options) {
  RequireBiobjective(problem, "the greedy algorithm");
  RequireEpsilon(epsilon);
  OracleSession session(problem, MakeSessionOptions(options));
  if (!session.CanConstrained(0) || !session.CanConstrained(1)) {
    throw UnsupportedOracle(
        "the greedy algorithm needs Constrained^1 and Constrained^2");
  }
  const int m = problem.bound_exponent();
  const Rational top = RangeHigh(m);
  const Rational gap = Separation(m);
  const Rational factor = Rational(1) + epsilon;
  auto constrained = [&](std::size_t i, const Rational& b) {
    return session.Constrained(i, std::span(&b, 1));
  };

  ParetoRunResult result;
  if (!constrained(1, top).has_value()) {
    result.audit = session.TakeAudit();
    return result;
  }
  const OracleAnswer left = constrained(0, top);
  Check(left.has_value(), "Constrained^1(2^M) answered NO");
  OracleAnswer tilde = constrained(1, top);
  Check(tilde.has_value(), "Constrained^2(2^M) answered NO");
  Rational bound2 = factor * tilde->image[1];
  OracleAnswer x = constrained(0, bound2);
  Check(x.has_value(), "Constrained^1 answered NO above a feasible point");
  Rational bound1 = x->image[0] - gap;
  SolutionSet chosen;
  chosen.Add(*x);
  while (bound1 >= left->image[0]) {
    ++result.stats.loop_iterations;
    tilde = constrained(1, bound1);
    Check(tilde.has_value(), "Constrained^2 answered NO above f_1(x_left)");
    bound2 = factor * tilde->image[1];
    ++result.stats.bound_updates;
    x = constrained(0, bound2);
    Check(x.has_value() && x->image[0] <= bound1,
          "Constrained^1 made no progress in f_1");
    bound1 = x->image[0] - gap;
    chosen.Add(*x);
  }
  result.audit = session.TakeAudit();
  Finish(result, chosen, options);
  return result;
}

std::string AlgorithmName(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGrid:
      return "grid";
    case Algorithm::kAdaptive:
      return "adaptive";
    case Algorithm::kDy:
      return "dy";
    case Algorithm::kGreedy:
      return "greedy";
    case Algorithm::kExistence:
      return "existence";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kGrid, Algorithm::kAdaptive, Algorithm::kDy,
                      Algorithm::kGreedy, Algorithm::kExistence}) {
    if (AlgorithmName(a) == name) return a;
  }
  return std::nullopt;
}

ParetoRunResult RunAlgorithm(Algorithm algorithm, const Problem& problem,
                             const Rational& epsilon,
                             const AlgorithmOptions& options) {
  switch (algorithm) {
    case Algorithm::kGrid:
      return GridAlgorithm(problem, epsilon, options);
    case Algorithm::kAdaptive:
      return AdaptiveAlgorithm(problem, epsilon, options);
    case Algorithm::kDy:
      return DyAlgorithm(problem, epsilon, options);
    case Algorithm::kGreedy:
      return GreedyMinAlgorithm(problem, epsilon, options);
    case Algorithm::kExistence:
      return ExistenceCover(problem, epsilon, options);
  }
  throw InvalidParameter("unknown algorithm");
}

ParetoRoutine MakeParetoRoutine(Algorithm algorithm, AlgorithmOptions options) {
  return [algorithm, options](const Problem& problem, const Rational& epsilon) {
    return RunAlgorithm(algorithm, problem, epsilon, options).set;
  };
}

}  // namespace molp
