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
#include "grpcent/io.hpp"
#include "grpcent/optimizer.hpp"
#include "grpcent/random_walk.hpp"
#include "grpcent/sampling.hpp"
#include "oracle.hpp"

using namespace grpcent;

namespace {

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

Graph fixed_200() {
  std::mt19937_64 rng(200);
  return oracle::random_connected(rng, 200, 0.015);
}

}  // namespace

TEST_CASE("sampling a complete graph yields a smaller complete graph") {
  auto s = random_walk_sample(complete(50), {.target_nodes = 40, .seed = 1});
  CHECK(s.graph.num_vertices() == 40);
  CHECK(s.graph.num_edges() == 40 * 39 / 2);
  CHECK_FALSE(s.reduced_to_component);
  CHECK(s.distinct_visited == 40);
}

TEST_CASE("sampling the whole path") {
  auto s = random_walk_sample(path3(), {.target_nodes = 3, .seed = 5});
  CHECK(s.graph.num_vertices() == 3);
  CHECK(s.original_ids == std::vector<Vertex>{0, 1, 2});
  CHECK(write_edge_list(s.graph) == write_edge_list(path3()));
}

TEST_CASE("sampling rejects bad configurations") {
  CHECK_THROWS_AS(random_walk_sample(path3(), {.target_nodes = 4}), InputError);
  CHECK_THROWS_AS(random_walk_sample(path3(), {.target_nodes = 1}), InputError);
  CHECK_THROWS_AS(random_walk_sample(path3(), {.target_nodes = 3, .restart_probability = 1.0}),
                  InputError);
  CHECK_THROWS_AS(random_walk_sample(path3(), {.target_nodes = 3, .step_budget = 2}),
                  InputError);
  // Restarting almost always pins the walk to the start's neighborhood.
  std::string text;
  for (int i = 0; i < 99; ++i) text += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  CHECK_THROWS_AS(random_walk_sample(load_edge_list(text), {.target_nodes = 90,
                                                            .restart_probability = 0.99,
                                                            .step_budget = 1000}),
                  NumericalError);
}

TEST_CASE("sampled edges exist in the source graph") {
  auto g = fixed_200();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = random_walk_sample(g, {.target_nodes = 40, .seed = seed});
    CHECK(is_connected(s.graph));
    CHECK(s.distinct_visited == 40);
    CHECK(s.graph.num_vertices() <= 40);
    CHECK(s.reduced_to_component == (s.graph.num_vertices() < 40));
    CHECK(std::is_sorted(s.original_ids.begin(), s.original_ids.end()));
    for (const auto& e : s.graph.edges())
      CHECK(g.has_edge(s.original_ids[e.u], s.original_ids[e.v]));
    // Induced: every source edge among kept vertices is present.
    for (Vertex a = 0; a < s.graph.num_vertices(); ++a)
      for (Vertex b = a + 1; b < s.graph.num_vertices(); ++b)
        CHECK(g.has_edge(s.original_ids[a], s.original_ids[b]) == s.graph.has_edge(a, b));
  }
}

TEST_CASE("sampling is deterministic for a fixed seed") {
  auto g = fixed_200();
  auto a = random_walk_sample(g, {.target_nodes = 40, .seed = 42});
  auto b = random_walk_sample(g, {.target_nodes = 40, .seed = 42});
  auto text = write_edge_list(a.graph) + write_sample_mapping(g, a);
  CHECK(text == write_edge_list(b.graph) + write_sample_mapping(g, b));
  CHECK(sha256_hex(text) == "151a795634e977e2765649a2973556f9fed246a801b60d93bed022cb6691d006");
}

TEST_CASE("sample mapping lines") {
  auto g = fixture_graph("novice.edges");
  auto s = random_walk_sample(g, {.target_nodes = 25, .seed = 3});
  auto map = write_sample_mapping(g, s);
  CHECK(map.rfind("0\t0\tanimal\n", 0) == 0);
}

TEST_CASE("generate_family structure") {
  auto small = generate_family({.n = 2, .m = 1});
  CHECK(small.graph.num_vertices() == 5);
  CHECK(small.graph.num_edges() == 4);

  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{3, 2}, {3, 3}, {4, 2}, {2, 5}}) {
    auto f = generate_family({.n = n, .m = m});
    const auto& g = f.graph;
    CHECK(g.num_vertices() == 1 + 2 * m * n);
    CHECK(f.hub == 0);
    CHECK(g.degree(0) == 2 * m);
    CHECK(is_connected(g));
    REQUIRE(f.clique_attach.size() == m);
    REQUIRE(f.star_roots.size() == m);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(f.clique_attach[i] == 1 + i * n);
      CHECK(f.star_roots[i] == 1 + (m + i) * n);
      CHECK(g.degree(f.clique_attach[i]) == n);
      CHECK(g.degree(f.star_roots[i]) == n);
      for (std::size_t j = 1; j < n; ++j) {
        CHECK(g.degree(f.clique_attach[i] + j) == n - 1);
        CHECK(g.degree(f.star_roots[i] + j) == 1);
      }
    }
    CHECK(f.clique_landmarks().size() == m + 1);
    CHECK(f.star_landmarks().contains(0));
  }
  auto f = generate_family({.n = 3, .m = 2});
  CHECK(f.graph.name(0) == "v");
  CHECK(f.graph.name(1) == "k1");
  CHECK(f.graph.name(7) == "t1");
  CHECK_THROWS_AS(generate_family({.n = 1, .m = 2}), InputError);
  CHECK_THROWS_AS(generate_family({.n = 3, .m = 0}), InputError);
}

TEST_CASE("clique landmarks beat star landmarks under the random walk") {
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{3, 2}, {3, 3}, {4, 2}}) {
    auto f = generate_family({.n = n, .m = m});
    auto sk = f.clique_landmarks(), st = f.star_landmarks();
    CHECK(group_randomwalk(f.graph, sk).value < group_randomwalk(f.graph, st).value);
    CHECK(group_closeness(f.graph, sk).exact == group_closeness(f.graph, st).exact);
  }
}

TEST_CASE("family optima at k = m + 1 for n = 3, m = 2") {
  // Values from exhaustive enumeration with an independent solver.
  auto f = generate_family({.n = 3, .m = 2});
  const auto& g = f.graph;
  auto sets = [](const OptimumResult& r) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& s : r.optimal_sets)
      out.emplace_back(s.members().begin(), s.members().end());
    return out;
  };
  auto rw = optimumset(g, 3, MeasureKind::kRandomWalk);
  CHECK(rw.best_value.value == doctest::Approx(3.9).epsilon(1e-12));
  CHECK(sets(rw) == std::vector<std::vector<Vertex>>{{1, 4, 7}, {1, 4, 10}});
  auto bc = optimumset(g, 3, MeasureKind::kBetweenness);
  CHECK(sets(bc) == std::vector<std::vector<Vertex>>{{0, 7, 10}});
  auto cc = optimumset(g, 3, MeasureKind::kCloseness);
  CHECK(cc.best_value.exact == Rational(7, 5));
  CHECK(cc.optimal_sets.size() == 22);
  CHECK(std::find(cc.optimal_sets.begin(), cc.optimal_sets.end(), f.clique_landmarks()) !=
        cc.optimal_sets.end());
  CHECK(std::find(cc.optimal_sets.begin(), cc.optimal_sets.end(), f.star_landmarks()) !=
        cc.optimal_sets.end());
}
