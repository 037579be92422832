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

#include "grpcent/measures.hpp"

#include <cstdio>

#include "grpcent/error.hpp"

namespace grpcent {

namespace {

void require_proper(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices())
    throw InputError("vertex set does not belong to this graph");
  if (!s.is_proper())
    throw InputError("group measure undefined for S = V (empty complement)");
}

// BFS over vertices with in_set[v] == 0, counting shortest paths. Entries for
// masked or unreachable vertices are left at kUnreachable / 0.
void bfs_avoiding(const Graph& g, Vertex src, std::span<const char> in_set,
                  std::vector<std::uint32_t>& dist,
                  std::vector<std::uint64_t>& sigma,
                  std::vector<Vertex>& queue) {
  const std::size_t n = g.num_vertices();
  dist.assign(n, kUnreachable);
  sigma.assign(n, 0);
  queue.clear();
  queue.push_back(src);
  dist[src] = 0;
  sigma[src] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (const auto& nb : g.neighbors(u)) {
      Vertex w = nb.vertex;
      if (in_set[w]) continue;
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
      // No overflow check: counts avoiding S never exceed counts in G,
      // which were checked when the index was built.
      if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
    }
  }
}

}  // namespace

std::string_view measure_name(MeasureKind kind) noexcept {
  switch (kind) {
    case MeasureKind::kDegree: return "degree";
    case MeasureKind::kCloseness: return "closeness";
    case MeasureKind::kBetweenness: return "betweenness";
    case MeasureKind::kRandomWalk: return "randomwalk";
  }
  return "?";
}

std::optional<MeasureKind> parse_measure(std::string_view name) {
  if (name == "degree") return MeasureKind::kDegree;
  if (name == "closeness") return MeasureKind::kCloseness;
  if (name == "betweenness") return MeasureKind::kBetweenness;
  if (name == "randomwalk" || name == "random-walk" || name == "rw")
    return MeasureKind::kRandomWalk;
  return std::nullopt;
}

std::string Score::render() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  if (exact) return exact->str() + " (" + buf + ")";
  return buf;
}

Rational degree_from_mask(const Graph& g, std::span<const char> in_set) {
  std::int64_t outside = 0, touched = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_set[v]) continue;
    ++outside;
    for (const auto& nb : g.neighbors(v)) {
      if (in_set[nb.vertex]) {
        ++touched;
        break;
      }
    }
  }
  return Rational(touched, outside);
}

Rational closeness_from_mask(const Graph& g, std::span<const char> in_set,
                             std::vector<std::uint32_t>& dist) {
  const std::size_t n = g.num_vertices();
  dist.assign(n, kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex v = 0; v < n; ++v)
    if (in_set[v]) {
      dist[v] = 0;
      queue.push_back(v);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (const auto& nb : g.neighbors(u))
      if (dist[nb.vertex] == kUnreachable) {
        dist[nb.vertex] = dist[u] + 1;
        queue.push_back(nb.vertex);
      }
  }
  std::int64_t sum = 0, outside = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (in_set[v]) continue;
    if (dist[v] == kUnreachable)
      throw InputError("group closeness requires a connected graph");
    sum += dist[v];
    ++outside;
  }
  return Rational(sum, outside);
}

Score group_degree(const Graph& g, const VertexSet& s) {
  require_proper(g, s);
  return Score::from_rational(degree_from_mask(g, s.mask()));
}

Score group_closeness(const Graph& g, const VertexSet& s) {
  require_proper(g, s);
  std::vector<std::uint32_t> scratch;
  return Score::from_rational(closeness_from_mask(g, s.mask(), scratch));
}

Score group_betweenness(const Graph& g, const VertexSet& s) {
  require_proper(g, s);
  if (s.complement_size() < 2)
    throw InputError("group betweenness needs at least two non-members");
  return Score::from_double(BetweennessIndex(g).evaluate(s.mask()));
}

PathSplit sigma_through_set(const Graph& g, Vertex u, Vertex v,
                            const VertexSet& s) {
  if (s.universe() != g.num_vertices())
    throw InputError("vertex set does not belong to this graph");
  if (s.contains(u) || s.contains(v))
    throw InputError("path endpoints must lie outside the set");
  if (u == v) throw InputError("path endpoints must differ");
  auto full = shortest_path_counts(g, u);
  if (full.dist[v] == kUnreachable)
    throw InputError("endpoints are disconnected");
  std::vector<std::uint32_t> dist;
  std::vector<std::uint64_t> sigma;
  std::vector<Vertex> queue;
  auto mask = s.mask();
  bfs_avoiding(g, u, mask, dist, sigma, queue);
  std::uint64_t avoiding = dist[v] == full.dist[v] ? sigma[v] : 0;
  return {full.sigma[v] - avoiding, full.sigma[v]};
}

BetweennessIndex::BetweennessIndex(const Graph& g)
    : g_(&g),
      n_(g.num_vertices()),
      dist_(n_ * n_, kUnreachable),
      sigma_(n_ * n_, 0) {
  for (Vertex u = 0; u < n_; ++u) {
    auto pc = shortest_path_counts(g, u);
    std::copy(pc.dist.begin(), pc.dist.end(), dist_.begin() + u * n_);
    std::copy(pc.sigma.begin(), pc.sigma.end(), sigma_.begin() + u * n_);
  }
}

double BetweennessIndex::evaluate(std::span<const char> in_set) const {
  std::vector<std::uint32_t> dist;
  std::vector<std::uint64_t> sigma;
  std::vector<Vertex> queue;
  double bc = 0;
  std::size_t outside = 0;
  for (Vertex u = 0; u < n_; ++u) {
    if (in_set[u]) continue;
    ++outside;
    bfs_avoiding(*g_, u, in_set, dist, sigma, queue);
    for (Vertex v = u + 1; v < n_; ++v) {
      if (in_set[v]) continue;
      const std::uint64_t total = sigma_[u * n_ + v];
      if (total == 0)
        throw InputError("group betweenness requires a connected graph");
      // Disconnected in G - S, or only longer detours remain: every
      // geodesic crosses S.
      const std::uint64_t avoiding =
          dist[v] == dist_[u * n_ + v] ? sigma[v] : 0;
      bc += static_cast<double>(total - avoiding) / static_cast<double>(total);
    }
  }
  if (outside < 2)
    throw InputError("group betweenness needs at least two non-members");
  return 2.0 * bc / (static_cast<double>(outside) * (outside - 1));
}

}  // namespace grpcent
