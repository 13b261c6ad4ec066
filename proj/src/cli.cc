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

#include "molp/cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <sstream>
#include <tuple>
#include <utility>

#include "CLI11.hpp"
#include "molp/algorithms.h"
#include "molp/errors.h"
#include "molp/generators.h"
#include "molp/io.h"
#include "molp/verify.h"

namespace molp {

namespace {

// Maps library exceptions to the exit-code contract.
template <typename Fn>
int Guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UnsupportedOracle& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapabilityError;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

Rational PositiveRational(const std::string& text, const char* what) {
  const Rational value = Rational::Parse(text);
  if (value.sign() <= 0) {
    throw InvalidParameter(std::string(what) + " must be positive, got " +
                           text);
  }
  return value;
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::vector<int64_t> ParseIntegerList(const std::string& text) {
  std::vector<int64_t> out;
  for (const std::string& item : SplitCommas(text)) {
    const Rational value = Rational::Parse(item);
    if (value.Floor() != value.Ceil()) {
      throw ParseError("expected an integer, got '" + item + "'");
    }
    const BigInt v = value.Floor();
    if (!v.fits_slong_p()) throw ParseError("integer out of range: " + item);
    out.push_back(v.get_si());
  }
  if (out.empty()) throw ParseError("empty value list");
  return out;
}

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

// Distinct images up to which solve reports the exhaustive minimum.
constexpr std::size_t kMetricsCoverCap = 32;

std::string Stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

}  // namespace

int CmdGen(const GenConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const Rational epsilon = PositiveRational(config.epsilon, "epsilon");
    // Derived constants go to stderr when the instance itself is on stdout.
    std::ostream& info = config.output.empty() ? err : out;
    std::string text;
    int m = 0;
    if (config.family == "thm2") {
      const ExplicitInstance inst = GenerateChain(epsilon, config.n);
      text = FormatExplicit(inst);
      m = inst.bound_exponent();
    } else if (config.family == "thm5") {
      const ExplicitInstance inst = GenerateHiddenPoint(
          epsilon, Rational::Parse(config.f1), Rational::Parse(config.f2),
          config.include_x3);
      text = FormatExplicit(inst);
      m = inst.bound_exponent();
    } else if (config.family == "thm6") {
      const std::vector<int64_t> values = ParseIntegerList(config.partition);
      const PartitionSchedule sched = GeneratePartitionSchedule(values, epsilon);
      text = FormatScheduling(sched.instance);
      m = SchedulingProblem(sched.instance).bound_exponent();
      info << "K=" << sched.k << '\n';
    } else if (config.family == "thm8") {
      std::vector<Rational> base;
      for (const std::string& v : SplitCommas(config.base)) {
        base.push_back(Rational::Parse(v));
      }
      const ExplicitInstance inst = GenerateThreeObjectiveTrap(
          epsilon, config.n, ObjectiveVector(std::move(base)),
          config.include_primes);
      text = FormatExplicit(inst);
      m = inst.bound_exponent();
    } else if (config.family == "random") {
      if (config.p < 2 || config.count < 0) {
        throw InvalidParameter("random needs p >= 2 and count >= 0");
      }
      const ExplicitInstance inst = GenerateRandomExplicit(
          static_cast<std::size_t>(config.p),
          static_cast<std::size_t>(config.count), config.bound_exponent,
          config.seed);
      text = FormatExplicit(inst, /*declare_bound=*/true);
      m = inst.bound_exponent();
    } else {
      throw InvalidParameter("unknown family '" + config.family + "'");
    }
    Emit(config.output, text, out);
    info << "M=" << m << '\n';
    return kExitOk;
  });
}

int CmdSolve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const Rational epsilon = PositiveRational(config.epsilon, "epsilon");
    const std::optional<Algorithm> algorithm = ParseAlgorithm(config.algorithm);
    if (!algorithm.has_value()) {
      throw InvalidParameter("unknown algorithm '" + config.algorithm + "'");
    }
    LoadOptions load;
    load.graph_enumeration = config.graph_enumeration;
    const LoadedInstance loaded =
        ParseInstance(ReadFile(config.input), load);
    const Problem& problem = *loaded.problem;
    const std::size_t p = problem.num_objectives();
    const int m = problem.bound_exponent();

    AlgorithmOptions options;
    options.denominator_cap = config.denominator_cap;
    options.filter_dominated = config.filter_dominated;
    options.assert_lemma2 = config.assert_lemma2;
    options.parallel_grid = config.parallel_grid;

    const auto start = std::chrono::steady_clock::now();
    const ParetoRunResult run = RunAlgorithm(*algorithm, problem, epsilon,
                                             options);
    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);

    Emit(config.output, FormatSolution(p, epsilon, run.set), out);
    if (!config.audit_output.empty()) {
      WriteFile(config.audit_output, run.audit.Export());
    }

    std::optional<std::size_t> minimum;
    bool covered = true;
    if (loaded.listing.has_value()) {
      covered = VerifyOneExact(run.set, *loaded.listing,
                               OneExactAlpha(epsilon, p))
                    .pass;
      try {
        minimum = ExhaustiveMinOneExact(*loaded.listing, epsilon,
                                        kMetricsCoverCap)
                      .size;
      } catch (const InvalidParameter&) {
        // Too many distinct images for the exhaustive minimum.
      }
    }

    // Size and call ceilings each method guarantees.
    const AuditSummary summary = SummarizeAudit(run.audit);
    std::optional<std::size_t> size_ceiling;
    std::optional<std::size_t> call_ceiling;
    std::size_t measured_calls = 0;
    auto power = [&](int64_t side) {
      std::size_t cells = 1;
      for (std::size_t j = 0; j + 1 < p; ++j) {
        cells *= static_cast<std::size_t>(side);
      }
      return cells;
    };
    switch (*algorithm) {
      case Algorithm::kGrid:
        size_ceiling = call_ceiling = power(GridSide(run.schedule->delta, m));
        measured_calls = summary.TopLevelCalls(OracleKind::kDualRestrict);
        break;
      case Algorithm::kExistence:
        size_ceiling = call_ceiling = power(GridSide(epsilon, m));
        measured_calls = summary.TopLevelCalls(OracleKind::kBoxQuery);
        break;
      case Algorithm::kAdaptive:
        call_ceiling = static_cast<std::size_t>(
            AdaptiveCallCeiling(run.schedule->delta, m));
        measured_calls = summary.TopLevelCalls(OracleKind::kDualRestrict);
        if (minimum) size_ceiling = 2 * *minimum;
        break;
      case Algorithm::kDy:
        if (minimum) size_ceiling = 2 * *minimum;
        break;
      case Algorithm::kGreedy:
        measured_calls = summary.TopLevelCalls(OracleKind::kConstrained);
        if (minimum) {
          size_ceiling = *minimum;
          call_ceiling = 2 * *minimum + 3;
        }
        break;
    }
    const bool within = (!size_ceiling || run.set.size() <= *size_ceiling) &&
                        (!call_ceiling || measured_calls <= *call_ceiling);
    std::string verdict;
    if (!covered || !within) {
      verdict = "fail";
    } else {
      verdict = loaded.listing.has_value() ? "pass" : "unverified";
    }

    if (!config.metrics_output.empty()) {
      auto opt = [](const std::optional<std::size_t>& v) {
        return v ? std::to_string(*v) : std::string("-");
      };
      KeyValues metrics;
      metrics["instance"] = Stem(config.input);
      metrics["algorithm"] = AlgorithmName(*algorithm);
      metrics["epsilon"] = epsilon.ToString();
      metrics["set_size"] = std::to_string(run.set.size());
      metrics["min_size"] = opt(minimum);
      metrics["calls"] = std::to_string(summary.total);
      metrics["ceiling_size"] = opt(size_ceiling);
      metrics["ceiling_calls"] = opt(call_ceiling);
      metrics["bound_exponent"] = std::to_string(m);
      metrics["delta"] =
          run.schedule ? run.schedule->delta.ToString() : std::string("-");
      metrics["effective_epsilon"] =
          run.schedule ? run.schedule->effective_epsilon.ToString()
                       : epsilon.ToString();
      metrics["verdict"] = verdict;
      metrics["wall_ms"] = std::to_string(wall.count());
      WriteFile(config.metrics_output, FormatKeyValues(metrics));
    }
    if (verdict == "fail") {
      err << "solution set failed its own check\n";
      return kExitVerifyFailed;
    }
    return kExitOk;
  });
}

int CmdVerify(const VerifyConfig& config, std::ostream& out,
              std::ostream& err) {
  return Guarded(err, [&] {
    LoadOptions load;
    load.graph_enumeration = true;
    const LoadedInstance loaded = ParseInstance(ReadFile(config.input), load);
    const SolutionFile solution = ParseSolution(ReadFile(config.solution));
    if (!loaded.listing.has_value()) {
      throw UnsupportedOracle("instance cannot be enumerated for verification");
    }
    if (solution.p != loaded.problem->num_objectives()) {
      throw ContractViolation("solution file has " +
                              std::to_string(solution.p) +
                              " objectives, instance has " +
                              std::to_string(loaded.problem->num_objectives()));
    }
    const Rational epsilon =
        config.epsilon ? PositiveRational(*config.epsilon, "epsilon")
                       : solution.epsilon;
    const VerificationReport report =
        VerifyOneExact(solution.solutions, *loaded.listing,
                       OneExactAlpha(epsilon, solution.p));
    out << report.Serialize();
    return report.pass ? kExitOk : kExitVerifyFailed;
  });
}

int CmdReport(const ReportConfig& config, std::ostream& out,
              std::ostream& err) {
  return Guarded(err, [&] {
    namespace fs = std::filesystem;
    if (!fs::is_directory(config.directory)) {
      throw ParseError("not a directory: '" + config.directory + "'");
    }
    std::vector<std::pair<std::string, KeyValues>> runs;
    for (const fs::directory_entry& entry :
         fs::directory_iterator(config.directory)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".metrics") {
        continue;
      }
      runs.emplace_back(entry.path().filename().string(),
                        ParseKeyValues(ReadFile(entry.path().string())));
    }
    if (runs.empty()) {
      throw ParseError("no .metrics files in '" + config.directory + "'");
    }
    auto field = [](const KeyValues& kv, const std::string& key) {
      const auto it = kv.find(key);
      return it == kv.end() ? std::string("-") : it->second;
    };
    std::sort(runs.begin(), runs.end(), [&](const auto& a, const auto& b) {
      return std::make_tuple(field(a.second, "instance"),
                             field(a.second, "algorithm"), a.first) <
             std::make_tuple(field(b.second, "instance"),
                             field(b.second, "algorithm"), b.first);
    });
    std::ostringstream table;
    table << "instance\talgorithm\tepsilon\tset_size\tmin_size\tratio\t"
             "oracle_calls\tceiling_size\tceiling_calls\tverdict\n";
    for (const auto& [name, kv] : runs) {
      std::string ratio = "-";
      const std::string set_size = field(kv, "set_size");
      const std::string min_size = field(kv, "min_size");
      if (set_size != "-" && min_size != "-" && min_size != "0") {
        ratio = (Rational::Parse(set_size) / Rational::Parse(min_size))
                    .ToString();
      }
      table << field(kv, "instance") << '\t' << field(kv, "algorithm") << '\t'
            << field(kv, "epsilon") << '\t' << set_size << '\t' << min_size
            << '\t' << ratio << '\t' << field(kv, "calls") << '\t'
            << field(kv, "ceiling_size") << '\t' << field(kv, "ceiling_calls")
            << '\t' << field(kv, "verdict") << '\n';
    }
    Emit(config.output, table.str(), out);
    return kExitOk;
  });
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact one-exact epsilon-Pareto set computation", "molp"};
  app.require_subcommand(1);

  GenConfig gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a generated instance");
  gen_cmd->add_option("--family", gen.family, "thm2|thm5|thm6|thm8|random")
      ->required();
  gen_cmd->add_option("--eps", gen.epsilon, "Epsilon as a rational");
  gen_cmd->add_option("--n", gen.n, "Chain length");
  gen_cmd->add_option("--a", gen.partition, "Partition values, a1,a2,...");
  gen_cmd->add_option("--f1", gen.f1, "f_1 of the hidden point");
  gen_cmd->add_option("--f2", gen.f2, "f_2 of the hidden point");
  gen_cmd->add_flag("--include-x3", gen.include_x3);
  gen_cmd->add_option("--base", gen.base, "Base image b1,b2,b3");
  gen_cmd->add_flag("--include-primes", gen.include_primes);
  gen_cmd->add_option("--p", gen.p, "Number of objectives");
  gen_cmd->add_option("--count", gen.count, "Number of points");
  gen_cmd->add_option("--m", gen.bound_exponent, "Bound exponent M");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("-o,--out", gen.output, "Output path");

  RunConfig run;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Compute a Pareto set");
  solve_cmd->add_option("--input", run.input)->required();
  solve_cmd->add_option("--alg", run.algorithm,
                        "grid|adaptive|dy|greedy|existence");
  solve_cmd->add_option("--eps", run.epsilon, "Epsilon as a rational");
  solve_cmd->add_option("--cap", run.denominator_cap,
                        "Denominator cap for the derived step");
  solve_cmd->add_option("--out", run.output, "Solution file");
  solve_cmd->add_option("--audit", run.audit_output, "Oracle audit (TSV)");
  solve_cmd->add_option("--metrics", run.metrics_output, "Metrics file");
  solve_cmd->add_flag("--filter-dominated", run.filter_dominated);
  solve_cmd->add_flag("--assert-lemma2", run.assert_lemma2);
  solve_cmd->add_flag("--parallel-grid", run.parallel_grid);
  solve_cmd->add_flag("--graph-enumeration", run.graph_enumeration,
                      "Enumerate paths of small graphs");

  VerifyConfig verify;
  std::string verify_eps;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a solution set");
  verify_cmd->add_option("--input", verify.input)->required();
  verify_cmd->add_option("--solution", verify.solution)->required();
  CLI::Option* eps_opt = verify_cmd->add_option("--eps", verify_eps);

  ReportConfig report;
  CLI::App* report_cmd = app.add_subcommand("report", "Tabulate metrics");
  report_cmd->add_option("--dir", report.directory)->required();
  report_cmd->add_option("--out", report.output, "Output TSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (gen_cmd->parsed()) return CmdGen(gen, out, err);
  if (solve_cmd->parsed()) return CmdSolve(run, out, err);
  if (verify_cmd->parsed()) {
    if (eps_opt->count() > 0) verify.epsilon = verify_eps;
    return CmdVerify(verify, out, err);
  }
  return CmdReport(report, out, err);
}

}  // namespace molp
