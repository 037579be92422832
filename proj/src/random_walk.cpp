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

#include "grpcent/random_walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "grpcent/error.hpp"
#include "grpcent/parallel.hpp"
#include "grpcent/rng.hpp"

namespace grpcent {

namespace {

constexpr double kInverseResidual = 1e-8;
constexpr double kSolveResidual = 1e-12;

void require_proper(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices())
    throw InputError("vertex set does not belong to this graph");
  if (!s.is_proper())
    throw InputError("hitting times undefined for S = V (empty complement)");
}

}  // namespace

TransitionMatrix transition_matrix(const Graph& g) {
  const std::size_t n = g.num_vertices();
  TransitionMatrix t{Matrix(n, n)};
  for (Vertex u = 0; u < n; ++u) {
    const double wu = weighted_degree(g, u);
    if (wu <= 0) throw InputError("isolated vertex " + g.name(u));
    for (const auto& nb : g.neighbors(u)) t.p(u, nb.vertex) = nb.weight / wu;
  }
  return t;
}

StationaryDistribution stationary(const Graph& g) {
  const std::size_t n = g.num_vertices();
  StationaryDistribution s{std::vector<double>(n)};
  double total = 0;
  for (Vertex v = 0; v < n; ++v) {
    s.pi[v] = weighted_degree(g, v);
    if (s.pi[v] <= 0) throw InputError("isolated vertex " + g.name(v));
    total += s.pi[v];
  }
  for (double& x : s.pi) x /= total;
  return s;
}

FundamentalMatrix fundamental_matrix(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("empty graph");
  auto p = transition_matrix(g).p;
  auto st = stationary(g);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = (i == j ? 1.0 : 0.0) - p(i, j) + st.pi[j];
  Matrix z;
  try {
    z = inverse_refined(a, kInverseResidual);
  } catch (const NumericalError& e) {
    throw NumericalError(std::string("fundamental matrix: ") + e.what() +
                         " (graph disconnected or degenerate?)");
  }
  double res = max_abs_diff(a * z, Matrix::identity(n));
  return {std::move(z), std::move(st), res};
}

double hitting_time(const FundamentalMatrix& fm, Vertex i, Vertex j) {
  if (i == j) return 0.0;
  return (fm.z(j, j) - fm.z(i, j)) / fm.stationary.pi[j];
}

double hitting_time_pair(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.num_vertices() || v >= g.num_vertices())
    throw InputError("vertex out of range");
  if (u == v) return 0.0;
  return hitting_time(fundamental_matrix(g), u, v);
}

Matrix hitting_time_matrix(const Graph& g) {
  auto fm = fundamental_matrix(g);
  const std::size_t n = g.num_vertices();
  Matrix h(n, n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) h(i, j) = hitting_time(fm, i, j);
  return h;
}

ContractedGraph contract(const Graph& g, const VertexSet& s) {
  require_proper(g, s);
  const std::size_t n = g.num_vertices();
  const auto in_set = s.mask();
  ContractedGraph c;
  c.merged = static_cast<Vertex>(s.complement_size());
  c.mapping.assign(n, c.merged);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!in_set[v]) c.mapping[v] = next++;

  std::vector<Edge> edges;
  std::vector<double> into_set(n, 0.0);
  std::vector<char> on_boundary(n, 0);
  for (const auto& e : g.edges()) {
    const bool a = in_set[e.u], b = in_set[e.v];
    if (!a && !b) {
      edges.push_back({c.mapping[e.u], c.mapping[e.v], e.weight});
    } else if (a != b) {
      const Vertex outside = a ? e.v : e.u;
      into_set[outside] += e.weight;
      on_boundary[a ? e.u : e.v] = 1;
    }
    // Edges with both ends in S are dropped.
  }
  for (Vertex v = 0; v < n; ++v)
    if (!in_set[v] && into_set[v] > 0)
      edges.push_back({c.mapping[v], c.merged, into_set[v]});
  for (Vertex v = 0; v < n; ++v)
    if (on_boundary[v]) c.boundary.push_back(v);

  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.resize(c.merged + 1);
    for (Vertex v = 0; v < n; ++v)
      if (!in_set[v]) labels[c.mapping[v]] = g.name(v);
    labels[c.merged] = "{S}";
  }
  c.base = Graph(c.merged + 1, std::move(edges), std::move(labels));
  return c;
}

std::string_view route_name(HittingRoute r) noexcept {
  switch (r) {
    case HittingRoute::kContractionZ: return "contraction-Z";
    case HittingRoute::kAbsorbingSolve: return "absorbing-solve";
    case HittingRoute::kMonteCarlo: return "monte-carlo";
  }
  return "?";
}

std::optional<HittingRoute> parse_route(std::string_view name) {
  if (name == "contraction" || name == "contraction-Z")
    return HittingRoute::kContractionZ;
  if (name == "absorbing" || name == "absorbing-solve")
    return HittingRoute::kAbsorbingSolve;
  if (name == "montecarlo" || name == "monte-carlo")
    return HittingRoute::kMonteCarlo;
  return std::nullopt;
}

namespace {

std::vector<double> absorbing_solve(const Graph& g,
                                    std::span<const char> in_set) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> index(n, kUnreachable);
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < n; ++v)
    if (!in_set[v]) {
      index[v] = static_cast<Vertex>(outside.size());
      outside.push_back(v);
    }
  const std::size_t c = outside.size();
  Matrix a = Matrix::identity(c);
  for (std::size_t i = 0; i < c; ++i) {
    const Vertex u = outside[i];
    const double wu = weighted_degree(g, u);
    if (wu <= 0) throw InputError("isolated vertex " + g.name(u));
    for (const auto& nb : g.neighbors(u))
      if (!in_set[nb.vertex]) a(i, index[nb.vertex]) -= nb.weight / wu;
  }
  std::vector<double> ones(c, 1.0);
  std::vector<double> x;
  try {
    x = solve_refined(a, ones, kSolveResidual);
  } catch (const NumericalError& e) {
    throw NumericalError(std::string("absorbing solve: ") + e.what() +
                         " (set unreachable from some vertex?)");
  }
  std::vector<double> h(n, 0.0);
  for (std::size_t i = 0; i < c; ++i) h[outside[i]] = x[i];
  return h;
}

}  // namespace

HittingSolution hitting_time_set(const Graph& g, const VertexSet& s,
                                 HittingRoute route) {
  require_proper(g, s);
  HittingSolution sol{s, {}, route, std::nullopt, std::nullopt};
  switch (route) {
    case HittingRoute::kAbsorbingSolve:
      sol.h = absorbing_solve(g, s.mask());
      break;
    case HittingRoute::kContractionZ: {
      auto c = contract(g, s);
      auto fm = fundamental_matrix(c.base);
      sol.h.assign(g.num_vertices(), 0.0);
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (c.mapping[v] != c.merged)
          sol.h[v] = hitting_time(fm, c.mapping[v], c.merged);
      break;
    }
    case HittingRoute::kMonteCarlo:
      throw InputError(
          "Monte-Carlo hitting times need walk parameters; use "
          "monte_carlo_hitting");
  }
  return sol;
}

double randomwalk_from_mask(const Graph& g, std::span<const char> in_set) {
  auto h = absorbing_solve(g, in_set);
  double sum = 0;
  std::size_t outside = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!in_set[v]) {
      sum += h[v];
      ++outside;
    }
  return sum / static_cast<double>(outside);
}

Score group_randomwalk(const Graph& g, const VertexSet& s) {
  require_proper(g, s);
  return Score::from_double(randomwalk_from_mask(g, s.mask()));
}

HittingSolution monte_carlo_hitting(const Graph& g, const VertexSet& s,
                                    const MonteCarloConfig& cfg) {
  require_proper(g, s);
  if (cfg.walks_per_source < 1)
    throw InputError("walks_per_source must be at least 1");
  const std::size_t n = g.num_vertices();
  const std::uint64_t max_steps =
      cfg.max_steps > 0 ? cfg.max_steps : 100ULL * n * n;
  const auto in_set = s.mask();

  // Cumulative weights per vertex for inverse-CDF neighbor selection.
  std::vector<std::vector<double>> cumulative(n);
  for (Vertex u = 0; u < n; ++u) {
    double acc = 0;
    for (const auto& nb : g.neighbors(u)) cumulative[u].push_back(acc += nb.weight);
    if (cumulative[u].empty() && !in_set[u])
      throw InputError("isolated vertex " + g.name(u));
  }

  const Rng root(cfg.seed);
  std::vector<double> mean(n, 0.0), se(n, 0.0);
  std::vector<std::uint64_t> truncated(n, 0);
  const auto outside = s.complement();

  parallel_for(outside.size(), cfg.workers, [&](std::size_t idx) {
    const Vertex src = outside[idx];
    Rng rng = root.split(src);
    // Welford accumulation over completed walks.
    double m = 0, m2 = 0;
    std::uint64_t done = 0, cut = 0;
    for (std::uint64_t w = 0; w < cfg.walks_per_source; ++w) {
      Vertex at = src;
      std::uint64_t steps = 0;
      while (!in_set[at] && steps < max_steps) {
        const auto& cum = cumulative[at];
        const double r = rng.uniform() * cum.back();
        auto it = std::upper_bound(cum.begin(), cum.end(), r);
        if (it == cum.end()) --it;
        at = g.neighbors(at)[static_cast<std::size_t>(it - cum.begin())].vertex;
        ++steps;
      }
      if (!in_set[at]) {
        ++cut;
        continue;
      }
      ++done;
      const double x = static_cast<double>(steps);
      const double delta = x - m;
      m += delta / static_cast<double>(done);
      m2 += delta * (x - m);
    }
    mean[src] = m;
    se[src] = done > 1 ? std::sqrt(m2 / static_cast<double>(done - 1) /
                                   static_cast<double>(done))
                       : 0.0;
    truncated[src] = cut;
  });

  MonteCarloStats stats;
  stats.seed = cfg.seed;
  stats.walks_per_source = cfg.walks_per_source;
  stats.max_steps = max_steps;
  stats.total_walks = cfg.walks_per_source * outside.size();
  stats.truncated_walks =
      std::accumulate(truncated.begin(), truncated.end(), std::uint64_t{0});
  stats.truncated = std::move(truncated);
  const double frac = static_cast<double>(stats.truncated_walks) /
                      static_cast<double>(stats.total_walks);
  if (frac > cfg.max_truncated_fraction)
    throw NumericalError("Monte-Carlo: " +
                         std::to_string(stats.truncated_walks) + " of " +
                         std::to_string(stats.total_walks) +
                         " walks truncated at " + std::to_string(max_steps) +
                         " steps; raise max_steps");
  return {s, std::move(mean), HittingRoute::kMonteCarlo, std::move(se),
          std::move(stats)};
}

UpperBoundCheck check_upper_bound(const Graph& g, const VertexSet& s) {
  require_proper(g, s);
  UpperBoundCheck out;
  out.lhs = group_randomwalk(g, s).value;
  const auto df = multi_source_distances(g, s);
  double dist_sum = 0, deg_sum = 0;
  for (Vertex v : s.complement()) {
    if (df.dist[v] == kUnreachable)
      throw InputError("upper bound requires a connected graph");
    dist_sum += df.dist[v];
    deg_sum += static_cast<double>(g.degree(v));
  }
  const double c = static_cast<double>(s.complement_size());
  out.mid = dist_sum * deg_sum / c;
  out.rhs = c * c * c;
  out.holds = out.lhs <= out.mid + 1e-9;
  return out;
}

}  // namespace grpcent
