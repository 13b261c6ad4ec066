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

#include "molp/io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "molp/errors.h"

namespace molp {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> words;
};

std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream words{std::string(raw)};
    Line line;
    line.number = number;
    for (std::string w; words >> w;) line.words.push_back(std::move(w));
    if (!line.words.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

[[noreturn]] void Fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

Rational Number(const Line& line, std::size_t index) {
  try {
    return Rational::Parse(line.words.at(index));
  } catch (const ParseError& e) {
    Fail(line, e.what());
  }
}

int64_t Integer(const Line& line, std::size_t index) {
  const std::string& w = line.words.at(index);
  int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc() || ptr != w.data() + w.size()) {
    Fail(line, "expected an integer, got '" + w + "'");
  }
  return value;
}

void Arity(const Line& line, std::size_t words) {
  if (line.words.size() != words) {
    Fail(line, "'" + line.words[0] + "' expects " + std::to_string(words - 1) +
                   " fields, got " + std::to_string(line.words.size() - 1));
  }
}

// Checks the "molp <kind> ..." header and returns the remaining lines.
std::vector<Line> Body(std::string_view text, const std::string& kind,
                       std::size_t header_words, Line* header) {
  std::vector<Line> lines = Tokenize(text);
  if (lines.empty() || lines[0].words.size() < 2 ||
      lines[0].words[0] != "molp" || lines[0].words[1] != kind) {
    throw ParseError("expected a 'molp " + kind + "' header");
  }
  Arity(lines[0], header_words);
  *header = lines[0];
  lines.erase(lines.begin());
  return lines;
}

std::string Join(const ObjectiveVector& v) { return v.ToString(); }

}  // namespace

ExplicitInstance ParseExplicit(std::string_view text) {
  Line header;
  const std::vector<Line> lines = Body(text, "explicit", 3, &header);
  const int64_t p = Integer(header, 2);
  if (p < 2) Fail(header, "p must be at least 2");
  std::optional<int> bound;
  std::vector<EvaluatedSolution> points;
  for (const Line& line : lines) {
    const std::string& key = line.words[0];
    if (key == "bound") {
      Arity(line, 2);
      if (bound.has_value()) Fail(line, "duplicate 'bound'");
      bound = static_cast<int>(Integer(line, 1));
    } else if (key == "point") {
      Arity(line, static_cast<std::size_t>(p) + 2);
      std::vector<Rational> values;
      for (int64_t i = 0; i < p; ++i) {
        values.push_back(Number(line, static_cast<std::size_t>(i) + 2));
        if (values.back().sign() <= 0) Fail(line, "values must be positive");
      }
      points.push_back({line.words[1], ObjectiveVector(std::move(values))});
    } else {
      Fail(line, "unknown record '" + key + "'");
    }
  }
  return ExplicitInstance(static_cast<std::size_t>(p), std::move(points),
                          bound);
}

GraphInstance ParseGraph(std::string_view text) {
  Line header;
  const std::vector<Line> lines = Body(text, "graph", 2, &header);
  std::optional<int64_t> nodes, source, target;
  std::vector<GraphEdge> edges;
  for (const Line& line : lines) {
    const std::string& key = line.words[0];
    auto single = [&](std::optional<int64_t>& slot) {
      Arity(line, 2);
      if (slot.has_value()) Fail(line, "duplicate '" + key + "'");
      slot = Integer(line, 1);
    };
    if (key == "nodes") {
      single(nodes);
    } else if (key == "source") {
      single(source);
    } else if (key == "target") {
      single(target);
    } else if (key == "edge") {
      Arity(line, 5);
      edges.push_back({static_cast<int>(Integer(line, 1)),
                       static_cast<int>(Integer(line, 2)), Number(line, 3),
                       Number(line, 4)});
    } else {
      Fail(line, "unknown record '" + key + "'");
    }
  }
  if (!nodes || !source || !target) {
    throw ParseError("graph needs 'nodes', 'source' and 'target'");
  }
  return GraphInstance(static_cast<int>(*nodes), static_cast<int>(*source),
                       static_cast<int>(*target), std::move(edges));
}

SchedulingInstance ParseScheduling(std::string_view text) {
  Line header;
  const std::vector<Line> lines = Body(text, "sched", 3, &header);
  const int64_t m = Integer(header, 2);
  if (m < 1) Fail(header, "need at least one machine");
  std::vector<Job> jobs;
  for (const Line& line : lines) {
    if (line.words[0] != "job") Fail(line, "unknown record '" + line.words[0] + "'");
    Arity(line, 2 + 2 * static_cast<std::size_t>(m));
    Job job;
    job.token = line.words[1];
    for (int64_t i = 0; i < m; ++i) {
      job.time.push_back(Number(line, 2 + 2 * static_cast<std::size_t>(i)));
      job.cost.push_back(Number(line, 3 + 2 * static_cast<std::size_t>(i)));
    }
    jobs.push_back(std::move(job));
  }
  return SchedulingInstance(static_cast<int>(m), std::move(jobs));
}

std::string FormatExplicit(const ExplicitInstance& instance,
                           bool declare_bound) {
  std::ostringstream out;
  out << "molp explicit " << instance.num_objectives() << '\n';
  if (declare_bound) out << "bound " << instance.bound_exponent() << '\n';
  for (const EvaluatedSolution& s : instance.points()) {
    out << "point " << s.token << ' ' << Join(s.image) << '\n';
  }
  return out.str();
}

std::string FormatGraph(const GraphInstance& instance) {
  std::ostringstream out;
  out << "molp graph\n"
      << "nodes " << instance.num_nodes() << '\n'
      << "source " << instance.source() << '\n'
      << "target " << instance.target() << '\n';
  for (const GraphEdge& e : instance.edges()) {
    out << "edge " << e.from << ' ' << e.to << ' ' << e.cost1 << ' ' << e.cost2
        << '\n';
  }
  return out.str();
}

std::string FormatScheduling(const SchedulingInstance& instance) {
  std::ostringstream out;
  out << "molp sched " << instance.num_machines() << '\n';
  for (const Job& job : instance.jobs()) {
    out << "job " << job.token;
    for (int i = 0; i < instance.num_machines(); ++i) {
      out << ' ' << job.time[static_cast<std::size_t>(i)] << ' '
          << job.cost[static_cast<std::size_t>(i)];
    }
    out << '\n';
  }
  return out.str();
}

SolutionFile ParseSolution(std::string_view text) {
  Line header;
  const std::vector<Line> lines = Body(text, "solution", 4, &header);
  SolutionFile file;
  const int64_t p = Integer(header, 2);
  if (p < 2) Fail(header, "p must be at least 2");
  file.p = static_cast<std::size_t>(p);
  file.epsilon = Number(header, 3);
  for (const Line& line : lines) {
    if (line.words[0] != "sol") Fail(line, "unknown record '" + line.words[0] + "'");
    Arity(line, file.p + 2);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < file.p; ++i) {
      values.push_back(Number(line, i + 2));
      if (values.back().sign() <= 0) Fail(line, "values must be positive");
    }
    file.solutions.push_back({line.words[1], ObjectiveVector(std::move(values))});
  }
  return file;
}

std::string FormatSolution(std::size_t p, const Rational& epsilon,
                           const std::vector<EvaluatedSolution>& solutions) {
  std::ostringstream out;
  out << "molp solution " << p << ' ' << epsilon << '\n';
  for (const EvaluatedSolution& s : solutions) {
    out << "sol " << s.token << ' ' << Join(s.image) << '\n';
  }
  return out.str();
}

LoadedInstance ParseInstance(std::string_view text,
                             const LoadOptions& options) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty() || lines[0].words.size() < 2 ||
      lines[0].words[0] != "molp") {
    throw ParseError("missing 'molp <kind>' header");
  }
  const std::string& kind = lines[0].words[1];
  LoadedInstance loaded;
  if (kind == "explicit") {
    loaded.kind = InstanceKind::kExplicit;
    ExplicitInstance instance = ParseExplicit(text);
    loaded.listing = instance;
    loaded.problem = std::make_unique<ExplicitProblem>(std::move(instance));
  } else if (kind == "graph") {
    loaded.kind = InstanceKind::kGraph;
    GraphOptions graph_options;
    graph_options.enumeration_oracles = options.graph_enumeration;
    auto problem =
        std::make_unique<ShortestPathProblem>(ParseGraph(text), graph_options);
    if (options.graph_enumeration) {
      loaded.listing = ExplicitInstance(2, problem->EnumeratePaths(),
                                        problem->bound_exponent());
    }
    loaded.problem = std::move(problem);
  } else if (kind == "sched") {
    loaded.kind = InstanceKind::kScheduling;
    auto problem = std::make_unique<SchedulingProblem>(ParseScheduling(text));
    loaded.listing = problem->schedules();
    loaded.problem = std::move(problem);
  } else {
    throw ParseError("unknown instance kind '" + kind + "'");
  }
  return loaded;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw ParseError("failed writing '" + path + "'");
}

KeyValues ParseKeyValues(std::string_view text) {
  KeyValues out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected key=value, got '" + line + "'");
    }
    out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

std::string FormatKeyValues(const KeyValues& values) {
  std::string out;
  for (const auto& [key, value] : values) out += key + "=" + value + "\n";
  return out;
}

}  // namespace molp
