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
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "grpcent/graph.hpp"
#include "grpcent/measures.hpp"

namespace grpcent {

struct OptimizerConfig {
  std::size_t workers = 0;
  /// Largest C(n,k) the enumerator will accept.
  std::uint64_t budget = 10'000'000;
  /// Relative tie tolerance for betweenness and random-walk scores.
  /// Degree and closeness always compare exactly.
  double tolerance = 1e-9;
};

/// C(n,k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Scores membership masks under one measure. Shares precomputed
/// all-pairs path counts for betweenness; const methods are thread-safe.
class SetEvaluator {
 public:
  SetEvaluator(const Graph& g, MeasureKind kind);
  ~SetEvaluator();
  SetEvaluator(SetEvaluator&&) noexcept;

  MeasureKind kind() const noexcept { return kind_; }
  Score evaluate(std::span<const char> in_set) const;
  Score evaluate(const VertexSet& s) const { return evaluate(s.mask()); }

 private:
  const Graph* g_;
  MeasureKind kind_;
  std::unique_ptr<BetweennessIndex> betweenness_;
};

/// Tie test under the measure's regime: exact for rational scores,
/// |a − b| <= tol·max(1, |a|, |b|) otherwise.
bool scores_tie(const Score& a, const Score& b, double tol);
/// a is strictly better than b in the measure's direction and not tied.
bool score_better(MeasureKind kind, const Score& a, const Score& b, double tol);

struct OptimumResult {
  MeasureKind measure = MeasureKind::kDegree;
  std::size_t k = 0;
  Score best_value;
  /// Every optimal set, lexicographically sorted.
  std::vector<VertexSet> optimal_sets;
  std::uint64_t evaluated = 0;
  std::chrono::duration<double> wall_time{};
};

/// Exhaustive search over all size-k subsets. The subset space is split by
/// largest element (colexicographic blocks); per-block optima are merged
/// after all blocks finish, so the result does not depend on the number of
/// workers. Throws InputError for k outside [1, n) or a disconnected graph,
/// BudgetExceeded when C(n,k) > cfg.budget.
OptimumResult optimumset(const Graph& g, std::size_t k, MeasureKind measure,
                         const OptimizerConfig& cfg = {});

struct DecisionResult {
  double alpha = 0;
  std::optional<VertexSet> witness;
  std::optional<Score> witness_score;
};

/// First size-k set in colexicographic order scoring alpha (same tie regime
/// as optimumset; exact measures match alpha to 1e-12).
DecisionResult optimumset_decision(const Graph& g, std::size_t k,
                                   MeasureKind measure, double alpha,
                                   const OptimizerConfig& cfg = {});

struct CrossMeasureReport {
  std::size_t k_max = 0;
  /// results[k-1][m] for measure kAllMeasures[m].
  std::vector<std::array<OptimumResult, 4>> results;
  /// jaccard[k-1][p] over the six measure pairs in kMeasurePairs order:
  /// |A ∩ B| / |A ∪ B| where A, B are the unions of optimal-set members.
  std::vector<std::array<double, 6>> jaccard;
};

inline constexpr std::array<std::pair<int, int>, 6> kMeasurePairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

CrossMeasureReport cross_measure_report(const Graph& g, std::size_t k_max,
                                        const OptimizerConfig& cfg = {});

}  // namespace grpcent
