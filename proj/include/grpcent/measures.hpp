// Copyright 2026 The grpcent Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grpcent/graph.hpp"
#include "grpcent/rational.hpp"

namespace grpcent {

enum class MeasureKind { kDegree, kCloseness, kBetweenness, kRandomWalk };
enum class Direction { kMaximize, kMinimize };

inline constexpr std::array<MeasureKind, 4> kAllMeasures = {
    MeasureKind::kDegree, MeasureKind::kCloseness, MeasureKind::kBetweenness,
    MeasureKind::kRandomWalk};

constexpr Direction direction_of(MeasureKind kind) noexcept {
  switch (kind) {
    case MeasureKind::kDegree:
    case MeasureKind::kBetweenness:
      return Direction::kMaximize;
    case MeasureKind::kCloseness:
    case MeasureKind::kRandomWalk:
      return Direction::kMinimize;
  }
  return Direction::kMinimize;
}

/// degree, closeness, betweenness, randomwalk
std::string_view measure_name(MeasureKind kind) noexcept;
/// Accepts the names above plus `random-walk` and `rw`.
std::optional<MeasureKind> parse_measure(std::string_view name);

/// A group centrality value; `exact` is set for degree and closeness.
struct Score {
  double value = 0;
  std::optional<Rational> exact;

  static Score from_rational(Rational r) { return {r.value(), r}; }
  static Score from_double(double v) { return {v, std::nullopt}; }

  /// "p/q (0.123456)" when exact, otherwise the decimal alone.
  std::string render() const;
};

/// Fraction of non-members with at least one neighbor in s.
Score group_degree(const Graph& g, const VertexSet& s);

/// Mean hop distance from non-members to s.
Score group_closeness(const Graph& g, const VertexSet& s);

/// Fraction of shortest paths between non-member pairs that pass through s.
/// Requires at least two non-members.
Score group_betweenness(const Graph& g, const VertexSet& s);

struct PathSplit {
  std::uint64_t through = 0;
  std::uint64_t total = 0;
};

/// Number of shortest u–v paths in g that touch s, alongside the total.
/// Counted by the complement route: paths in g − s of the original length
/// are exactly the ones avoiding s.
PathSplit sigma_through_set(const Graph& g, Vertex u, Vertex v,
                            const VertexSet& s);

/// All-pairs shortest-path counts, built once per graph and shared across
/// many betweenness evaluations (the enumerator's hot path).
class BetweennessIndex {
 public:
  explicit BetweennessIndex(const Graph& g);

  /// Group betweenness for the set given by a membership mask.
  double evaluate(std::span<const char> in_set) const;

  std::uint32_t distance(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  std::uint64_t paths(Vertex u, Vertex v) const { return sigma_[u * n_ + v]; }

 private:
  const Graph* g_;
  std::size_t n_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint64_t> sigma_;
};

/// Group degree and closeness from a membership mask, skipping VertexSet
/// validation. `scratch` is resized as needed.
Rational degree_from_mask(const Graph& g, std::span<const char> in_set);
Rational closeness_from_mask(const Graph& g, std::span<const char> in_set,
                             std::vector<std::uint32_t>& scratch);

}  // namespace grpcent
