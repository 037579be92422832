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

#include "grpcent/sampling.hpp"

#include <algorithm>
#include <sstream>

#include "grpcent/error.hpp"
#include "grpcent/rng.hpp"

namespace grpcent {

SampleResult random_walk_sample(const Graph& g, const SampleConfig& cfg) {
  const std::size_t n = g.num_vertices();
  if (cfg.target_nodes < 2) throw InputError("target_nodes must be at least 2");
  if (cfg.step_budget < cfg.target_nodes)
    throw InputError("step_budget must be at least target_nodes");
  if (!(cfg.restart_probability > 0 && cfg.restart_probability < 1))
    throw InputError("restart_probability must lie in (0, 1)");
  if (n < cfg.target_nodes)
    throw InputError("graph has " + std::to_string(n) +
                     " vertices, fewer than target " +
                     std::to_string(cfg.target_nodes));
  if (!is_connected(g)) throw InputError("graph is not connected");

  Rng rng(cfg.seed);
  const auto start = static_cast<Vertex>(rng.below(n));
  std::vector<char> seen(n, 0);
  std::vector<Vertex> visited{start};
  seen[start] = 1;
  Vertex at = start;
  std::uint64_t steps = 0;
  while (visited.size() < cfg.target_nodes && steps < cfg.step_budget) {
    ++steps;
    if (rng.uniform() < cfg.restart_probability) {
      at = start;
      continue;
    }
    auto nb = g.neighbors(at);
    at = nb[rng.below(nb.size())].vertex;
    if (!seen[at]) {
      seen[at] = 1;
      visited.push_back(at);
    }
  }
  if (visited.size() < cfg.target_nodes)
    throw NumericalError("step budget " + std::to_string(cfg.step_budget) +
                         " exhausted after " + std::to_string(visited.size()) +
                         " distinct vertices");

  std::sort(visited.begin(), visited.end());
  SampleResult out;
  out.start = start;
  out.distinct_visited = visited.size();
  out.steps = steps;
  Graph induced = induced_subgraph(g, visited);
  auto comp = largest_component(induced);
  if (comp.size() == induced.num_vertices()) {
    out.graph = std::move(induced);
    out.original_ids = std::move(visited);
  } else {
    out.reduced_to_component = true;
    out.graph = induced_subgraph(induced, comp);
    for (Vertex v : comp) out.original_ids.push_back(visited[v]);
  }
  return out;
}

std::string write_sample_mapping(const Graph& source, const SampleResult& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.original_ids.size(); ++i) {
    os << i << '\t' << s.original_ids[i];
    if (source.has_labels()) os << '\t' << source.name(s.original_ids[i]);
    os << '\n';
  }
  return os.str();
}

VertexSet Family::clique_landmarks() const {
  std::vector<Vertex> m{hub};
  m.insert(m.end(), clique_attach.begin(), clique_attach.end());
  return VertexSet(std::move(m), graph.num_vertices());
}

VertexSet Family::star_landmarks() const {
  std::vector<Vertex> m{hub};
  m.insert(m.end(), star_roots.begin(), star_roots.end());
  return VertexSet(std::move(m), graph.num_vertices());
}

Family generate_family(const FamilyParams& p) {
  if (p.n < 2 || p.m < 1)
    throw InputError("family needs n >= 2 and m >= 1");
  const std::size_t total = 1 + 2 * p.m * p.n;
  Family f;
  std::vector<Edge> edges;
  std::vector<std::string> labels(total);
  labels[0] = "v";
  Vertex next = 1;
  for (std::size_t i = 1; i <= p.m; ++i) {
    const Vertex first = next;
    for (std::size_t a = 0; a < p.n; ++a) {
      labels[first + a] = a == 0 ? "k" + std::to_string(i)
                                 : "K" + std::to_string(i) + "." + std::to_string(a);
      for (std::size_t b = a + 1; b < p.n; ++b)
        edges.push_back({static_cast<Vertex>(first + a),
                         static_cast<Vertex>(first + b)});
    }
    edges.push_back({f.hub, first});
    f.clique_attach.push_back(first);
    next += static_cast<Vertex>(p.n);
  }
  for (std::size_t i = 1; i <= p.m; ++i) {
    const Vertex root = next;
    labels[root] = "t" + std::to_string(i);
    for (std::size_t a = 1; a < p.n; ++a) {
      labels[root + a] = "T" + std::to_string(i) + "." + std::to_string(a);
      edges.push_back({root, static_cast<Vertex>(root + a)});
    }
    edges.push_back({f.hub, root});
    f.star_roots.push_back(root);
    next += static_cast<Vertex>(p.n);
  }
  f.graph = Graph(total, std::move(edges), std::move(labels));
  return f;
}

}  // namespace grpcent
