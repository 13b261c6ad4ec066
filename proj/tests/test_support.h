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

// Reference oracles for tests. Everything here is written from the
// definitions with plain loops and shares no code with the library beyond
// its value types.

#ifndef MOLP_TESTS_TEST_SUPPORT_H_
#define MOLP_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "molp/explicit_problem.h"
#include "molp/graph_problem.h"
#include "molp/objective.h"
#include "molp/problem.h"
#include "molp/rational.h"

namespace molp_test {

using molp::EvaluatedSolution;
using molp::ObjectiveVector;
using molp::OracleAnswer;
using molp::Rational;

inline Rational Q(const char* text) { return Rational::Parse(text); }

inline ObjectiveVector Vec(std::vector<Rational> values) {
  return ObjectiveVector(std::move(values));
}

inline EvaluatedSolution Pt(std::string token, std::vector<Rational> values) {
  return {std::move(token), ObjectiveVector(std::move(values))};
}

// Tokens p0, p1, ... in order.
inline molp::ExplicitInstance Listing(
    std::size_t p, const std::vector<std::vector<Rational>>& images) {
  std::vector<EvaluatedSolution> points;
  for (std::size_t k = 0; k < images.size(); ++k) {
    points.push_back(Pt("p" + std::to_string(k), images[k]));
  }
  return molp::ExplicitInstance(p, std::move(points));
}

// The three-point chain used across the examples: (2,1), (3/2,4), (1,16).
inline molp::ExplicitInstance ThreeChain() {
  return Listing(2, {{2, 1}, {Rational(3, 2), 4}, {1, 16}});
}

// Bound on objective j in a list that skips objective i.
inline const Rational& BoundOf(std::span<const Rational> bounds, std::size_t i,
                               std::size_t j) {
  return bounds[j < i ? j : j - 1];
}

// f_j <= scale * B_j for every j != i.
inline bool Meets(const ObjectiveVector& v, std::size_t i,
                  std::span<const Rational> bounds, const Rational& scale) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j != i && v[j] > scale * BoundOf(bounds, i, j)) return false;
  }
  return true;
}

inline std::optional<Rational> ScanOpt(std::span<const EvaluatedSolution> pts,
                                       std::size_t i,
                                       std::span<const Rational> bounds) {
  std::optional<Rational> best;
  for (const auto& s : pts) {
    if (!Meets(s.image, i, bounds, Rational(1))) continue;
    if (!best || s.image[i] < *best) best = s.image[i];
  }
  return best;
}

// Empty string when `answer` is a listed point with its listed image.
inline std::string CheckListed(std::span<const EvaluatedSolution> pts,
                               const EvaluatedSolution& answer) {
  for (const auto& s : pts) {
    if (s.token == answer.token) {
      return s.image == answer.image ? "" : "image mismatch for " + s.token;
    }
  }
  return "unknown token " + answer.token;
}

inline std::string CheckConstrained(std::span<const EvaluatedSolution> pts,
                                    std::size_t i,
                                    std::span<const Rational> bounds,
                                    const OracleAnswer& answer) {
  const auto opt = ScanOpt(pts, i, bounds);
  if (!answer) return opt ? "NO although feasible" : "";
  if (!opt) return "answer although infeasible";
  if (auto e = CheckListed(pts, *answer); !e.empty()) return e;
  if (!Meets(answer->image, i, bounds, Rational(1))) return "bound violated";
  if (answer->image[i] != *opt) return "not optimal";
  return "";
}

inline std::string CheckRestrict(std::span<const EvaluatedSolution> pts,
                                 std::size_t i, const Rational& delta,
                                 std::span<const Rational> bounds,
                                 const OracleAnswer& answer) {
  const auto opt = ScanOpt(pts, i, bounds);
  if (!answer) return opt ? "NO although feasible" : "";
  if (!opt) return "answer although infeasible";
  if (auto e = CheckListed(pts, *answer); !e.empty()) return e;
  if (!Meets(answer->image, i, bounds, Rational(1))) return "bound violated";
  if (answer->image[i] > (Rational(1) + delta) * *opt) return "too far from opt";
  return "";
}

inline std::string CheckDualRestrict(std::span<const EvaluatedSolution> pts,
                                     std::size_t i, const Rational& delta,
                                     std::span<const Rational> bounds,
                                     const OracleAnswer& answer) {
  const auto opt = ScanOpt(pts, i, bounds);
  if (!answer) return opt ? "NO although the bounded region is nonempty" : "";
  if (auto e = CheckListed(pts, *answer); !e.empty()) return e;
  if (!Meets(answer->image, i, bounds, Rational(1) + delta)) {
    return "relaxed bound violated";
  }
  // opt is +infinity when the strict region is empty.
  if (opt && answer->image[i] > *opt) return "objective above opt";
  return "";
}

// a_1 <= b_1 and a_j <= (1+eps) b_j for j >= 2.
inline bool OneExactCovers(const ObjectiveVector& a, const ObjectiveVector& b,
                           const Rational& eps) {
  if (a[0] > b[0]) return false;
  for (std::size_t j = 1; j < a.size(); ++j) {
    if (a[j] > (Rational(1) + eps) * b[j]) return false;
  }
  return true;
}

inline bool UniformCovers(const ObjectiveVector& a, const ObjectiveVector& b,
                          const Rational& factor) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > factor * b[j]) return false;
  }
  return true;
}

using CoverRelation =
    std::function<bool(const ObjectiveVector&, const ObjectiveVector&)>;

// Every point is covered by some member, and every member is listed.
inline bool IsCover(std::span<const EvaluatedSolution> set,
                    std::span<const EvaluatedSolution> pts,
                    const CoverRelation& covers) {
  for (const auto& s : set) {
    if (!CheckListed(pts, s).empty()) return false;
  }
  for (const auto& y : pts) {
    if (std::none_of(set.begin(), set.end(), [&](const EvaluatedSolution& x) {
          return covers(x.image, y.image);
        })) {
      return false;
    }
  }
  return true;
}

inline bool IsOneExact(std::span<const EvaluatedSolution> set,
                       std::span<const EvaluatedSolution> pts,
                       const Rational& eps) {
  return IsCover(set, pts, [&](const auto& a, const auto& b) {
    return OneExactCovers(a, b, eps);
  });
}

// Minimum cover size by enumerating subsets in order of size; each size
// walks all masks with that many bits set. n <= 63.
inline std::size_t SubsetMinCover(std::span<const EvaluatedSolution> pts,
                                  const CoverRelation& covers) {
  const std::size_t n = pts.size();
  if (n == 0) return 0;
  std::vector<uint64_t> mask(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (covers(pts[a].image, pts[b].image)) mask[a] |= uint64_t{1} << b;
    }
  }
  const uint64_t full = (uint64_t{1} << n) - 1;
  for (std::size_t size = 1; size < n; ++size) {
    for (uint64_t subset = (uint64_t{1} << size) - 1; subset <= full;) {
      uint64_t covered = 0;
      for (uint64_t rest = subset; rest != 0; rest &= rest - 1) {
        covered |= mask[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      if (covered == full) return size;
      // Next mask with the same number of bits.
      const uint64_t low = subset & (~subset + 1);
      const uint64_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return n;
}

inline std::size_t SubsetMinOneExact(std::span<const EvaluatedSolution> pts,
                                     const Rational& eps) {
  return SubsetMinCover(pts, [&](const auto& a, const auto& b) {
    return OneExactCovers(a, b, eps);
  });
}

// Smallest u >= 0 with (1+d)^u >= target.
inline int64_t ExponentFor(const Rational& d, const Rational& target) {
  int64_t u = 0;
  Rational power(1);
  while (power < target) {
    power *= Rational(1) + d;
    ++u;
  }
  return u;
}

enum class FuzzStyle {
  // Coordinates on the 2^-2M grid inside [2^-M, 2^M].
  kGrid,
  // Small integers: many ties in every objective.
  kCoarse,
  // A descending staircase with jitter: large Pareto sets.
  kStaircase,
};

inline molp::ExplicitInstance RandomListing(std::mt19937_64& rng,
                                            std::size_t p, std::size_t count,
                                            FuzzStyle style, int m = 3) {
  std::vector<std::vector<Rational>> images;
  auto pick = [&](int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
  };
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Rational> v;
    for (std::size_t j = 0; j < p; ++j) {
      switch (style) {
        case FuzzStyle::kGrid: {
          const int64_t lo = int64_t{1} << m;
          const int64_t hi = int64_t{1} << (3 * m);
          v.push_back(Rational(pick(lo, hi), int64_t{1} << (2 * m)));
          break;
        }
        case FuzzStyle::kCoarse:
          v.push_back(Rational(pick(1, 6)));
          break;
        case FuzzStyle::kStaircase: {
          const int64_t step = static_cast<int64_t>(k) + 1;
          const int64_t base = j == 0 ? step : static_cast<int64_t>(count) + 1 - step;
          v.push_back(Rational(4 * base + pick(0, 3), 4));
          break;
        }
      }
    }
    images.push_back(std::move(v));
  }
  return Listing(p, images);
}

// Random digraph on n nodes with source 0 and target n-1.
inline molp::GraphInstance RandomGraph(std::mt19937_64& rng, int n,
                                       int edge_count) {
  auto pick = [&](int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
  };
  std::vector<molp::GraphEdge> edges;
  for (int e = 0; e < edge_count; ++e) {
    int u = static_cast<int>(pick(0, n - 1));
    int v = static_cast<int>(pick(0, n - 2));
    if (v >= u) ++v;
    edges.push_back({u, v, Rational(pick(1, 12), 2), Rational(pick(1, 9))});
  }
  return molp::GraphInstance(n, 0, n - 1, std::move(edges));
}

// Every simple s-t path as an edge-index token "e<i>-e<j>-..." with its
// summed costs.
inline std::vector<EvaluatedSolution> AllPaths(const molp::GraphInstance& g) {
  std::vector<EvaluatedSolution> out;
  std::vector<int> path;
  std::vector<bool> seen(static_cast<std::size_t>(g.num_nodes()), false);
  std::function<void(int)> walk = [&](int node) {
    if (node == g.target()) {
      Rational c1(0), c2(0);
      std::string token;
      for (int e : path) {
        c1 += g.edges()[static_cast<std::size_t>(e)].cost1;
        c2 += g.edges()[static_cast<std::size_t>(e)].cost2;
        token += (token.empty() ? "e" : "-e") + std::to_string(e);
      }
      out.push_back({token, ObjectiveVector({c1, c2})});
      return;
    }
    seen[static_cast<std::size_t>(node)] = true;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const auto& edge = g.edges()[e];
      if (edge.from != node || seen[static_cast<std::size_t>(edge.to)]) continue;
      path.push_back(static_cast<int>(e));
      walk(edge.to);
      path.pop_back();
    }
    seen[static_cast<std::size_t>(node)] = false;
  };
  walk(g.source());
  return out;
}

}  // namespace molp_test

#endif  // MOLP_TESTS_TEST_SUPPORT_H_
