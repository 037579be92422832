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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "grpcent/dense.hpp"
#include "grpcent/graph.hpp"
#include "grpcent/measures.hpp"

namespace grpcent {

/// p(u,v) = w(uv) / w(u) for uv in E, zero elsewhere.
struct TransitionMatrix {
  Matrix p;
};

struct StationaryDistribution {
  std::vector<double> pi;
};

/// Z = (I − P + P∞)^{-1}, where every row of P∞ is pi.
struct FundamentalMatrix {
  Matrix z;
  StationaryDistribution stationary;
  /// max |(I − P + P∞)·Z − I| after refinement.
  double residual = 0;
};

TransitionMatrix transition_matrix(const Graph& g);

/// Closed form w(v) / sum_w w(w); requires every vertex to have an edge.
StationaryDistribution stationary(const Graph& g);

/// Dense inverse by pivoted LU with iterative refinement. Throws
/// NumericalError if the residual stays at or above 1e-8, which is what a
/// disconnected input produces.
FundamentalMatrix fundamental_matrix(const Graph& g);

/// H(i,j) = (Z_jj − Z_ij) / pi(j).
double hitting_time(const FundamentalMatrix& fm, Vertex i, Vertex j);
double hitting_time_pair(const Graph& g, Vertex u, Vertex v);
/// Full n×n matrix of pairwise hitting times.
Matrix hitting_time_matrix(const Graph& g);

/// G_S: non-members keep their ids relative order and edges; S collapses to
/// a single vertex `merged` (the last id) whose edge to u carries the total
/// weight from u into S.
struct ContractedGraph {
  Graph base;
  Vertex merged = 0;
  /// Original vertex -> contracted vertex; members map to `merged`.
  std::vector<Vertex> mapping;
  /// Members of S with a neighbor outside S.
  std::vector<Vertex> boundary;
};

ContractedGraph contract(const Graph& g, const VertexSet& s);

enum class HittingRoute { kContractionZ, kAbsorbingSolve, kMonteCarlo };

std::string_view route_name(HittingRoute r) noexcept;
std::optional<HittingRoute> parse_route(std::string_view name);

struct MonteCarloStats {
  std::uint64_t seed = 0;
  std::uint64_t walks_per_source = 0;
  std::uint64_t max_steps = 0;
  std::uint64_t total_walks = 0;
  std::uint64_t truncated_walks = 0;
  /// Truncated walk count per source vertex (0 for members).
  std::vector<std::uint64_t> truncated;
};

struct HittingSolution {
  VertexSet target;
  /// Expected steps from each vertex; 0 for members.
  std::vector<double> h;
  HittingRoute route = HittingRoute::kAbsorbingSolve;
  /// Standard error of each mean; Monte-Carlo only.
  std::optional<std::vector<double>> std_error;
  std::optional<MonteCarloStats> monte_carlo;
};

/// Analytic hitting times to s. kContractionZ goes through contract() and
/// the fundamental matrix of G_S; kAbsorbingSolve solves (I − Q)h = 1 on
/// the non-members. kMonteCarlo is rejected here; use monte_carlo_hitting.
HittingSolution hitting_time_set(
    const Graph& g, const VertexSet& s,
    HittingRoute route = HittingRoute::kAbsorbingSolve);

/// Mean hitting time to s over the non-members.
Score group_randomwalk(const Graph& g, const VertexSet& s);

/// Absorbing-solve group random-walk score from a membership mask.
double randomwalk_from_mask(const Graph& g, std::span<const char> in_set);

struct MonteCarloConfig {
  std::uint64_t walks_per_source = 10000;
  /// 0 selects 100·n².
  std::uint64_t max_steps = 0;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
  /// Fail when more than this fraction of walks is truncated.
  double max_truncated_fraction = 0.01;
};

/// Simulates walks from every non-member. Per-source streams are derived
/// from (seed, source), so output does not depend on the worker count.
/// Truncated walks are excluded from the means and reported in the stats.
HittingSolution monte_carlo_hitting(const Graph& g, const VertexSet& s,
                                    const MonteCarloConfig& cfg);

struct UpperBoundCheck {
  double lhs = 0;
  double mid = 0;
  /// |V∖S|³; the constant in front of it is left unspecified.
  double rhs = 0;
  bool holds = false;
};

/// lhs = group random-walk score; mid = (1/|V∖S|)·Σ d(u,S)·Σ deg(v), both
/// sums over non-members. holds iff lhs <= mid + 1e-9.
UpperBoundCheck check_upper_bound(const Graph& g, const VertexSet& s);

}  // namespace grpcent
