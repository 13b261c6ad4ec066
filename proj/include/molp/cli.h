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

// Batch front end: gen, solve, verify, report.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 capability error.

#ifndef MOLP_CLI_H_
#define MOLP_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "molp/schedule.h"

namespace molp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapabilityError = 3;

struct GenConfig {
  std::string family;  // thm2, thm5, thm6, thm8, random
  std::string epsilon = "1";
  int n = 2;
  std::string partition;  // comma-separated positive integers
  std::string f1 = "10";
  std::string f2 = "8";
  bool include_x3 = false;
  std::string base = "1,1,8";
  bool include_primes = false;
  int p = 2;
  int count = 12;
  int bound_exponent = 4;
  uint64_t seed = 1;
  std::string output;  // empty: standard output
};

struct RunConfig {
  std::string input;
  std::string algorithm = "adaptive";
  std::string epsilon = "1";
  int64_t denominator_cap = kDefaultDenominatorCap;
  std::string output;  // solution file; empty: standard output
  std::string audit_output;
  std::string metrics_output;
  bool filter_dominated = false;
  bool assert_lemma2 = false;
  bool parallel_grid = false;
  bool graph_enumeration = false;
};

struct VerifyConfig {
  std::string input;
  std::string solution;
  // Defaults to the epsilon recorded in the solution file.
  std::optional<std::string> epsilon;
};

struct ReportConfig {
  std::string directory;
  std::string output;  // empty: standard output
};

int CmdGen(const GenConfig& config, std::ostream& out, std::ostream& err);
int CmdSolve(const RunConfig& config, std::ostream& out, std::ostream& err);
int CmdVerify(const VerifyConfig& config, std::ostream& out,
              std::ostream& err);
int CmdReport(const ReportConfig& config, std::ostream& out,
              std::ostream& err);

// Parses `args` (without the program name) and dispatches.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace molp

#endif  // MOLP_CLI_H_
