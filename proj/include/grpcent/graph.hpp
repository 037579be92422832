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
#include <string>
#include <string_view>
#include <vector>

namespace grpcent {

using Vertex = std::uint32_t;

inline constexpr std::uint32_t kUnreachable = UINT32_MAX;

struct Edge {
  Vertex u;
  Vertex v;
  double weight = 1.0;
};

struct Neighbor {
  Vertex vertex;
  double weight;
};

/// Undirected, simple, positively weighted graph on vertices 0..n-1.
///
/// Immutable once constructed. Each edge is stored once with u < v;
/// adjacency lists are sorted by neighbor id. Labels are optional and, when
/// present, cover every vertex.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes. Throws InputError on a self-loop, a
  /// duplicate edge, an out-of-range endpoint, a non-positive weight, or a
  /// label vector whose size differs from n.
  Graph(std::size_t n, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(Vertex u) const {
    return adjacency_.at(u);
  }
  std::size_t degree(Vertex u) const { return adjacency_.at(u).size(); }

  bool has_edge(Vertex u, Vertex v) const;
  /// Weight of edge uv, or nullopt when absent.
  std::optional<double> edge_weight(Vertex u, Vertex v) const;

  /// True iff some edge weight differs from 1.
  bool is_weighted() const noexcept { return weighted_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  /// Label of u, or its decimal id when the graph is unlabeled.
  std::string name(Vertex u) const;
  /// Vertex carrying the given label.
  std::optional<Vertex> find_label(std::string_view label) const;

  /// Same structure with every weight multiplied by factor (> 0).
  Graph scaled(double factor) const;
  Graph with_labels(std::vector<std::string> labels) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::string> labels_;
  bool weighted_ = false;
};

/// Canonically ordered, nonempty set of distinct vertices of a graph with
/// `universe` vertices.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts and validates. Throws InputError on an empty list, a duplicate,
  /// or a member outside [0, universe).
  VertexSet(std::vector<Vertex> members, std::size_t universe);

  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t universe() const noexcept { return universe_; }
  std::size_t complement_size() const noexcept {
    return universe_ - members_.size();
  }
  bool is_proper() const noexcept { return members_.size() < universe_; }
  bool contains(Vertex v) const;
  /// Per-vertex membership flags of length universe().
  std::vector<char> mask() const;
  /// Vertices not in the set, increasing.
  std::vector<Vertex> complement() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
  std::size_t universe_ = 0;
};

/// Hop distance from every vertex to the nearest member of `source`.
struct DistanceField {
  VertexSet source;
  std::vector<std::uint32_t> dist;
};

/// Shortest-path counts from a single source. sigma[v] == 0 marks an
/// unreachable vertex (dist[v] == kUnreachable).
struct PathCounts {
  Vertex source = 0;
  std::vector<std::uint32_t> dist;
  std::vector<std::uint64_t> sigma;
};

struct EdgeListOptions {
  /// Require a weight column on every line.
  bool weighted = false;
};

/// Parses whitespace-separated `u v [w]` lines; `#` starts a comment.
/// When every id token is a nonnegative integer the ids are used directly
/// (n = max id + 1); otherwise every token is interned as a label in
/// first-seen order.
Graph load_edge_list(std::string_view text, EdgeListOptions opts = {});
Graph load_edge_list_file(const std::string& path, EdgeListOptions opts = {});

/// Parses `index<TAB>label` lines.
std::vector<std::pair<Vertex, std::string>> parse_labels(std::string_view text);
std::vector<std::pair<Vertex, std::string>> load_labels_file(
    const std::string& path);

/// Attaches labels to an unlabeled graph, or renumbers a labeled graph so
/// that each label receives the index given for it. In the relabel case the
/// mapping must be a bijection onto the graph's labels.
Graph apply_labels(const Graph& g,
                   std::span<const std::pair<Vertex, std::string>> labels);

/// Canonical text form: one `u v` (or `u v w`) line per edge, u < v,
/// sorted. Labels are written instead of ids when use_labels is set.
std::string write_edge_list(const Graph& g, bool use_labels = false);

bool is_connected(const Graph& g);

/// Breadth-first expansion from every member of s at once.
DistanceField multi_source_distances(const Graph& g, const VertexSet& s);

/// BFS with path counting. Throws NumericalError if a count overflows 64
/// bits.
PathCounts shortest_path_counts(const Graph& g, Vertex source);

double weighted_degree(const Graph& g, Vertex u);

/// Subgraph induced by `keep` (any order; duplicates rejected). Vertex i of
/// the result is keep[i]; labels are carried over.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Vertices of the largest connected component, increasing. Ties go to the
/// component containing the smallest vertex id.
std::vector<Vertex> largest_component(const Graph& g);

}  // namespace grpcent
