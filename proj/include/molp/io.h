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

// Line-oriented text formats. '#' starts a comment; blank lines are ignored.
//
//   molp explicit <p>            molp graph             molp sched <m>
//   bound <M>          (opt.)    nodes <n>              job <tok> <p_1> <c_1>
//   point <tok> <v_1> .. <v_p>   source <id>                ... <p_m> <c_m>
//                                target <id>
//                                edge <u> <v> <c1> <c2>
//
//   molp solution <p> <eps>
//   sol <tok> <v_1> .. <v_p>
//
// Numbers are rationals written "a" or "a/b".

#ifndef MOLP_IO_H_
#define MOLP_IO_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "molp/explicit_problem.h"
#include "molp/graph_problem.h"
#include "molp/objective.h"
#include "molp/problem.h"
#include "molp/rational.h"
#include "molp/scheduling_problem.h"

namespace molp {

enum class InstanceKind { kExplicit, kGraph, kScheduling };

ExplicitInstance ParseExplicit(std::string_view text);
GraphInstance ParseGraph(std::string_view text);
SchedulingInstance ParseScheduling(std::string_view text);

std::string FormatExplicit(const ExplicitInstance& instance,
                           bool declare_bound = false);
std::string FormatGraph(const GraphInstance& instance);
std::string FormatScheduling(const SchedulingInstance& instance);

struct SolutionFile {
  std::size_t p = 0;
  Rational epsilon;
  std::vector<EvaluatedSolution> solutions;
};

SolutionFile ParseSolution(std::string_view text);
std::string FormatSolution(std::size_t p, const Rational& epsilon,
                           const std::vector<EvaluatedSolution>& solutions);

// A loaded instance of any kind, with the problem adapter and, when the
// feasible set can be listed, the explicit instance used for verification.
struct LoadedInstance {
  InstanceKind kind = InstanceKind::kExplicit;
  std::unique_ptr<Problem> problem;
  std::optional<ExplicitInstance> listing;
};

struct LoadOptions {
  // Graphs: expose enumeration oracles and list all paths for verification.
  bool graph_enumeration = false;
};

LoadedInstance ParseInstance(std::string_view text,
                             const LoadOptions& options = {});

// File helpers; throw ParseError when the file cannot be read or written.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

// Flat key=value records, one per line, in insertion order of a sorted map.
using KeyValues = std::map<std::string, std::string>;
KeyValues ParseKeyValues(std::string_view text);
std::string FormatKeyValues(const KeyValues& values);

}  // namespace molp

#endif  // MOLP_IO_H_
