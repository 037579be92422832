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

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "grpcent/error.hpp"
#include "grpcent/graph.hpp"
#include "oracle.hpp"

using namespace grpcent;

TEST_CASE("load_edge_list parses the smallest path") {
  auto g = load_edge_list("0 1\n1 2");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_labels());
}

TEST_CASE("load_edge_list rejects bad input with line numbers") {
  CHECK_THROWS_AS(load_edge_list("0 0"), InputError);
  CHECK_THROWS_AS(load_edge_list("0 1\n1 0"), InputError);
  CHECK_THROWS_AS(load_edge_list("0 1 -2"), InputError);
  CHECK_THROWS_AS(load_edge_list("0 1 0"), InputError);
  CHECK_THROWS_AS(load_edge_list("0 1 x"), InputError);
  CHECK_THROWS_AS(load_edge_list("0 1", {.weighted = true}), InputError);
  try {
    load_edge_list("# header\n0 1\n1\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("load_edge_list handles comments, weights and string ids") {
  auto g = load_edge_list("# c\n a b 2.5 # trailing\n\nb c 0.5\n");
  REQUIRE(g.has_labels());
  CHECK(g.num_vertices() == 3);
  CHECK(g.name(0) == "a");
  CHECK(g.name(2) == "c");
  CHECK(g.is_weighted());
  CHECK(weighted_degree(g, *g.find_label("b")) == doctest::Approx(3.0));
}

TEST_CASE("novice fixture has 25 concepts and 28 edges") {
  auto g = load_edge_list_file(fixture("novice.edges"));
  CHECK(g.num_vertices() == 25);
  CHECK(g.num_edges() == 28);
  CHECK(is_connected(g));
  CHECK(weighted_degree(g, *g.find_label("livingthing")) == 5.0);

  auto expert = load_edge_list_file(fixture("expert.edges"));
  CHECK(expert.num_vertices() == 25);
  CHECK(expert.num_edges() == 27);
  CHECK(is_connected(expert));
}

TEST_CASE("label file renumbers string graphs alphabetically") {
  auto g = fixture_graph("novice.edges");
  CHECK(g.name(0) == "animal");
  CHECK(g.name(18) == "livingthing");
  CHECK(g.name(24) == "tree");
  CHECK(g.has_edge(18, 24));  // livingthing–tree
  CHECK(g.num_edges() == 28);

  auto numeric = apply_labels(load_edge_list("0 1\n1 2"),
                              parse_labels("0\tx\n1\ty\n2\tz\n"));
  CHECK(numeric.name(1) == "y");
  CHECK_THROWS_AS(apply_labels(load_edge_list("0 1"), parse_labels("0\tx\n")),
                  InputError);
  CHECK_THROWS_AS(parse_labels("0 x\n"), InputError);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(load_edge_list("0 1\n1 2")));
  CHECK_FALSE(is_connected(load_edge_list("0 1\n2 3")));
}

TEST_CASE("multi_source_distances") {
  auto p2 = load_edge_list("0 1\n1 2");
  CHECK(multi_source_distances(p2, VertexSet({1}, 3)).dist ==
        std::vector<std::uint32_t>{1, 0, 1});
  CHECK(multi_source_distances(p2, VertexSet({0, 2}, 3)).dist ==
        std::vector<std::uint32_t>{0, 1, 0});

  // K_{1,4}: center 0, leaves 1..4.
  auto star = load_edge_list("0 1\n0 2\n0 3\n0 4");
  auto df = multi_source_distances(star, VertexSet({2}, 5));
  CHECK(df.dist == std::vector<std::uint32_t>{1, 2, 0, 2, 2});
  CHECK_THROWS_AS(VertexSet({}, 3), InputError);
}

TEST_CASE("shortest_path_counts") {
  auto c4 = load_edge_list("0 1\n1 2\n2 3\n3 0");
  CHECK(shortest_path_counts(c4, 0).sigma[2] == 2);
  auto p2 = load_edge_list("0 1\n1 2");
  CHECK(shortest_path_counts(p2, 0).sigma == std::vector<std::uint64_t>{1, 1, 1});
  auto k4 = load_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
  CHECK(shortest_path_counts(k4, 0).sigma == std::vector<std::uint64_t>{1, 1, 1, 1});
}

TEST_CASE("shortest_path_counts detects 64-bit overflow") {
  // Chain of 70 diamonds: 2^70 geodesics end to end.
  std::vector<Edge> edges;
  Vertex next = 1;
  Vertex tail = 0;
  for (int i = 0; i < 70; ++i) {
    Vertex a = next++, b = next++, head = next++;
    edges.push_back({tail, a});
    edges.push_back({tail, b});
    edges.push_back({a, head});
    edges.push_back({b, head});
    tail = head;
  }
  Graph g(next, std::move(edges));
  CHECK_THROWS_AS(shortest_path_counts(g, 0), NumericalError);
}

TEST_CASE("weighted_degree") {
  auto star = load_edge_list("0 1\n0 2\n0 3");
  CHECK(weighted_degree(star, 0) == 3.0);
  auto w = load_edge_list("0 1 2.5\n0 2 0.5");
  CHECK(weighted_degree(w, 0) == doctest::Approx(3.0));
}

TEST_CASE("traversal properties on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 14;
    auto g = oracle::random_connected(rng, n, 0.25, trial % 2 == 1);
    oracle::Dense d(g);
    auto fw = oracle::hop_distances(d);

    // Singleton multi-source BFS equals all-pairs distances.
    for (int v = 0; v < n; ++v) {
      auto df = multi_source_distances(g, VertexSet({static_cast<Vertex>(v)}, n));
      for (int u = 0; u < n; ++u) CHECK(df.dist[u] == static_cast<std::uint32_t>(fw[v][u]));
    }
    // Edge Lipschitz property for a random multi-source field.
    auto s = oracle::random_subset(rng, n, 1 + trial % std::max(1, n - 1));
    auto df = multi_source_distances(g, VertexSet(s, n));
    for (const auto& e : g.edges()) {
      auto a = df.dist[e.u], b = df.dist[e.v];
      CHECK((a > b ? a - b : b - a) <= 1u);
    }
    for (int v = 0; v < n; ++v)
      CHECK((df.dist[v] == 0) == std::binary_search(s.begin(), s.end(), v));

    // sigma recurrence over BFS layers and agreement with path enumeration.
    auto pc = shortest_path_counts(g, 0);
    for (int v = 1; v < n; ++v) {
      std::uint64_t sum = 0;
      for (const auto& nb : g.neighbors(v))
        if (pc.dist[nb.vertex] + 1 == pc.dist[v]) sum += pc.sigma[nb.vertex];
      CHECK(pc.sigma[v] == sum);
      CHECK(pc.sigma[v] == oracle::all_shortest_paths(d, fw, 0, v).size());
    }

    // Handshake: Σ w(v) = 2 Σ w(e).
    double total = 0, twice = 0;
    for (int v = 0; v < n; ++v) total += weighted_degree(g, v);
    for (const auto& e : g.edges()) twice += 2 * e.weight;
    CHECK(total == doctest::Approx(twice));
  }
}

TEST_CASE("edge list round trip is canonical and idempotent") {
  auto g = fixture_graph("expert.edges");
  auto once = write_edge_list(g);
  auto again = write_edge_list(load_edge_list(once));
  CHECK(once == again);
  auto labeled = write_edge_list(g, true);
  auto reloaded = apply_labels(load_edge_list(labeled),
                               load_labels_file(fixture("labels.tsv")));
  CHECK(write_edge_list(reloaded) == once);
}

TEST_CASE("induced subgraph and largest component") {
  auto g = load_edge_list("0 1\n1 2\n3 4");
  CHECK(largest_component(g) == std::vector<Vertex>{0, 1, 2});
  std::vector<Vertex> keep{4, 3, 1};
  auto sub = induced_subgraph(g, keep);
  CHECK(sub.num_vertices() == 3);
  CHECK(sub.num_edges() == 1);
  CHECK(sub.has_edge(0, 1));
}
