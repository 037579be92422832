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
#include <string>
#include <vector>

#include "grpcent/graph.hpp"

namespace grpcent {

struct SampleConfig {
  std::size_t target_nodes = 40;
  /// Chance per step of jumping back to the start vertex.
  double restart_probability = 0.15;
  std::uint64_t seed = 0;
  std::uint64_t step_budget = 1'000'000;
};

struct SampleResult {
  /// Induced subgraph on the largest component of the visited vertices.
  Graph graph;
  /// original_ids[i] is the source-graph id of sample vertex i.
  std::vector<Vertex> original_ids;
  Vertex start = 0;
  std::size_t distinct_visited = 0;
  std::uint64_t steps = 0;
  /// True when the induced subgraph was disconnected and got reduced.
  bool reduced_to_component = false;
};

/// Random walk with restart from a seed-chosen start vertex until
/// target_nodes distinct vertices are visited. Throws InputError on an
/// invalid config or a graph smaller than the target, NumericalError when
/// the step budget runs out first (message carries the distinct count).
SampleResult random_walk_sample(const Graph& g, const SampleConfig& cfg);

/// `sample_id<TAB>original_id[<TAB>label]` lines.
std::string write_sample_mapping(const Graph& source, const SampleResult& s);

struct FamilyParams {
  std::size_t n = 3;
  std::size_t m = 2;
};

/// Hub v joined to m n-cliques (through one attach vertex each) and m stars
/// of n vertices (through the root). Layout: hub = 0, then cliques with the
/// attach vertex first, then stars with the root first.
struct Family {
  Graph graph;
  Vertex hub = 0;
  std::vector<Vertex> clique_attach;
  std::vector<Vertex> star_roots;

  /// {v} ∪ attach vertices.
  VertexSet clique_landmarks() const;
  /// {v} ∪ star roots.
  VertexSet star_landmarks() const;
};

Family generate_family(const FamilyParams& p);

}  // namespace grpcent
