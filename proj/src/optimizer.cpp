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

#include "grpcent/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>

#include "grpcent/error.hpp"
#include "grpcent/parallel.hpp"
#include "grpcent/random_walk.hpp"

namespace grpcent {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using Wide = unsigned __int128;
  Wide r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r·(n−k+i)/i stays integral at every step.
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

SetEvaluator::SetEvaluator(const Graph& g, MeasureKind kind)
    : g_(&g), kind_(kind) {
  if (kind == MeasureKind::kBetweenness)
    betweenness_ = std::make_unique<BetweennessIndex>(g);
}

SetEvaluator::~SetEvaluator() = default;
SetEvaluator::SetEvaluator(SetEvaluator&&) noexcept = default;

Score SetEvaluator::evaluate(std::span<const char> in_set) const {
  switch (kind_) {
    case MeasureKind::kDegree:
      return Score::from_rational(degree_from_mask(*g_, in_set));
    case MeasureKind::kCloseness: {
      thread_local std::vector<std::uint32_t> scratch;
      return Score::from_rational(closeness_from_mask(*g_, in_set, scratch));
    }
    case MeasureKind::kBetweenness:
      return Score::from_double(betweenness_->evaluate(in_set));
    case MeasureKind::kRandomWalk:
      return Score::from_double(randomwalk_from_mask(*g_, in_set));
  }
  throw InputError("unknown measure");
}

bool scores_tie(const Score& a, const Score& b, double tol) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  const double scale = std::max({1.0, std::abs(a.value), std::abs(b.value)});
  return std::abs(a.value - b.value) <= tol * scale;
}

bool score_better(MeasureKind kind, const Score& a, const Score& b, double tol) {
  if (scores_tie(a, b, tol)) return false;
  const bool less = (a.exact && b.exact) ? *a.exact < *b.exact : a.value < b.value;
  return direction_of(kind) == Direction::kMinimize ? less : !less;
}

namespace {

// Numeric extremum, ignoring tolerance. Used to anchor the tie window so
// that the optimum list is independent of evaluation order.
bool strictly_more_extreme(MeasureKind kind, const Score& a, const Score& b) {
  const bool less = (a.exact && b.exact) ? *a.exact < *b.exact : a.value < b.value;
  const bool greater = (a.exact && b.exact) ? *b.exact < *a.exact : b.value < a.value;
  return direction_of(kind) == Direction::kMinimize ? less : greater;
}

// Visits the colexicographic block of size-k subsets whose largest element
// is `top`, i.e. {top} ∪ every (k−1)-subset of {0..top−1} in colex order.
// Stops early when visit returns false.
template <class Visit>
void for_each_in_block(std::size_t k, Vertex top, std::vector<Vertex>& set,
                       Visit&& visit) {
  const std::size_t r = k - 1;
  set.resize(k);
  for (std::size_t i = 0; i < r; ++i) set[i] = static_cast<Vertex>(i);
  set[r] = top;
  for (;;) {
    if (!visit(std::span<const Vertex>(set))) return;
    std::size_t j = 0;
    while (j < r && set[j] + 1 == (j + 1 < r ? set[j + 1] : top)) ++j;
    if (j == r) return;
    ++set[j];
    for (std::size_t i = 0; i < j; ++i) set[i] = static_cast<Vertex>(i);
  }
}

void check_request(const Graph& g, std::size_t k, const OptimizerConfig& cfg) {
  const std::size_t n = g.num_vertices();
  if (k < 1 || k >= n)
    throw InputError("k = " + std::to_string(k) + " outside [1, " +
                     std::to_string(n) + ")");
  if (!is_connected(g)) throw InputError("graph is not connected");
  const auto count = binomial(n, k);
  if (count > cfg.budget)
    throw BudgetExceeded("C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") = " +
                         (count == UINT64_MAX ? std::string(">= 2^64")
                                              : std::to_string(count)) +
                         " subsets exceeds budget " + std::to_string(cfg.budget));
}

struct Candidate {
  Score score;
  std::vector<Vertex> members;
};

struct BlockResult {
  std::optional<Score> best;
  std::vector<Candidate> ties;
  std::uint64_t evaluated = 0;
};

void offer(MeasureKind kind, double tol, BlockResult& acc, Score score,
           std::span<const Vertex> members) {
  if (!acc.best || strictly_more_extreme(kind, score, *acc.best)) {
    acc.best = score;
    std::erase_if(acc.ties, [&](const Candidate& c) {
      return !scores_tie(c.score, score, tol);
    });
  }
  if (scores_tie(score, *acc.best, tol))
    acc.ties.push_back({score, {members.begin(), members.end()}});
}

}  // namespace

OptimumResult optimumset(const Graph& g, std::size_t k, MeasureKind measure,
                         const OptimizerConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  check_request(g, k, cfg);
  const std::size_t n = g.num_vertices();
  if (measure == MeasureKind::kBetweenness && n - k < 2)
    throw InputError("group betweenness needs at least two non-members");
  const SetEvaluator eval(g, measure);

  const std::size_t blocks = n - (k - 1);
  std::vector<BlockResult> per_block(blocks);
  parallel_for(blocks, cfg.workers, [&](std::size_t b) {
    const auto top = static_cast<Vertex>(k - 1 + b);
    std::vector<Vertex> set;
    std::vector<char> mask(n, 0);
    BlockResult& acc = per_block[b];
    for_each_in_block(k, top, set, [&](std::span<const Vertex> members) {
      for (Vertex v : members) mask[v] = 1;
      Score s = eval.evaluate(mask);
      for (Vertex v : members) mask[v] = 0;
      ++acc.evaluated;
      offer(measure, cfg.tolerance, acc, std::move(s), members);
      return true;
    });
  });

  // Deterministic reduction: global extremum first, then the tie window.
  OptimumResult out;
  out.measure = measure;
  out.k = k;
  std::optional<Score> best;
  for (const auto& b : per_block) {
    out.evaluated += b.evaluated;
    if (b.best && (!best || strictly_more_extreme(measure, *b.best, *best)))
      best = b.best;
  }
  out.best_value = *best;
  for (auto& b : per_block)
    for (auto& c : b.ties)
      if (scores_tie(c.score, *best, cfg.tolerance))
        out.optimal_sets.emplace_back(std::move(c.members), n);
  std::sort(out.optimal_sets.begin(), out.optimal_sets.end());
  out.wall_time = std::chrono::steady_clock::now() - start;
  return out;
}

DecisionResult optimumset_decision(const Graph& g, std::size_t k,
                                   MeasureKind measure, double alpha,
                                   const OptimizerConfig& cfg) {
  check_request(g, k, cfg);
  const std::size_t n = g.num_vertices();
  if (measure == MeasureKind::kBetweenness && n - k < 2)
    throw InputError("group betweenness needs at least two non-members");
  const SetEvaluator eval(g, measure);

  auto matches = [&](const Score& s) {
    const double scale = std::max({1.0, std::abs(alpha), std::abs(s.value)});
    const double tol = s.exact ? 1e-12 : cfg.tolerance;
    return std::abs(s.value - alpha) <= tol * scale;
  };

  const std::size_t blocks = n - (k - 1);
  std::vector<std::optional<Candidate>> found(blocks);
  std::atomic<std::size_t> first_hit{blocks};
  parallel_for(blocks, cfg.workers, [&](std::size_t b) {
    // Blocks after an already-found witness cannot supply the first one.
    if (b > first_hit.load()) return;
    std::vector<Vertex> set;
    std::vector<char> mask(n, 0);
    for_each_in_block(k, static_cast<Vertex>(k - 1 + b), set,
                      [&](std::span<const Vertex> members) {
                        for (Vertex v : members) mask[v] = 1;
                        Score s = eval.evaluate(mask);
                        for (Vertex v : members) mask[v] = 0;
                        if (!matches(s)) return true;
                        found[b] = Candidate{s, {members.begin(), members.end()}};
                        std::size_t cur = first_hit.load();
                        while (b < cur && !first_hit.compare_exchange_weak(cur, b)) {
                        }
                        return false;
                      });
  });

  DecisionResult out;
  out.alpha = alpha;
  for (auto& f : found)
    if (f) {
      out.witness = VertexSet(std::move(f->members), n);
      out.witness_score = f->score;
      break;
    }
  return out;
}

CrossMeasureReport cross_measure_report(const Graph& g, std::size_t k_max,
                                        const OptimizerConfig& cfg) {
  if (k_max < 1 || k_max >= g.num_vertices())
    throw InputError("k_max = " + std::to_string(k_max) + " outside [1, " +
                     std::to_string(g.num_vertices()) + ")");
  CrossMeasureReport rep;
  rep.k_max = k_max;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::array<OptimumResult, 4> row;
    std::array<std::set<Vertex>, 4> unions;
    for (std::size_t m = 0; m < kAllMeasures.size(); ++m) {
      row[m] = optimumset(g, k, kAllMeasures[m], cfg);
      for (const auto& s : row[m].optimal_sets)
        unions[m].insert(s.members().begin(), s.members().end());
    }
    std::array<double, 6> jac{};
    for (std::size_t p = 0; p < kMeasurePairs.size(); ++p) {
      const auto& a = unions[kMeasurePairs[p].first];
      const auto& b = unions[kMeasurePairs[p].second];
      std::size_t inter = 0;
      for (Vertex v : a) inter += b.count(v);
      const std::size_t uni = a.size() + b.size() - inter;
      jac[p] = uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
    }
    rep.results.push_back(std::move(row));
    rep.jaccard.push_back(jac);
  }
  return rep;
}

}  // namespace grpcent
