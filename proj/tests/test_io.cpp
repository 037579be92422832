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

#include "fixtures.hpp"
#include "grpcent/error.hpp"
#include "grpcent/io.hpp"

using namespace grpcent;

TEST_CASE("sha256_hex") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("parse_set_spec and render_set") {
  auto g = fixture_graph("novice.edges");
  auto s = parse_set_spec(g, "livingthing, animal");
  CHECK(ids(s) == std::vector<Vertex>{0, 18});
  CHECK(render_set(g, s) == "{animal, livingthing}");
  CHECK(ids(parse_set_spec(g, "3")) == std::vector<Vertex>{3});
  try {
    parse_set_spec(g, "animal,dragon");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("dragon") != std::string::npos);
    CHECK(e.exit_code() == 2);
  }
  CHECK(render_set(path3(), VertexSet({0, 2}, 3)) == "{0, 2}");
}

TEST_CASE("centrality scores on the path center") {
  auto rows = centrality_scores(path3(), VertexSet({1}, 3),
                                {kAllMeasures.begin(), kAllMeasures.end()});
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) CHECK(r.score.value == doctest::Approx(1.0));
  auto tsv = centrality_tsv(rows);
  CHECK(tsv.find("degree\t1 (1.000000)") != std::string::npos);
  auto j = to_json(rows);
  CHECK(j.size() == 4);
  CHECK(j[0]["measure"] == "degree");
  CHECK(j[0]["score"]["exact"] == "1");

  auto ends = centrality_scores(path3(), VertexSet({0, 2}, 3),
                                {kAllMeasures.begin(), kAllMeasures.end()});
  CHECK(ends.size() == 3);
}

TEST_CASE("optima cells list two sets then the overflow count") {
  auto g = load_edge_list("0 1\n1 2\n2 3\n3 0");
  auto r = optimumset(g, 1, MeasureKind::kDegree);
  CHECK(render_optima_cell(g, r) == "{0}, {1}, ... (2)");
  auto p = optimumset(path3(), 1, MeasureKind::kDegree);
  CHECK(render_optima_cell(path3(), p) == "{1}");
  auto rep = cross_measure_report(path3(), 1);
  auto tsv = report_tsv(path3(), rep);
  CHECK(tsv == "k\tdegree\tcloseness\tbetweenness\trandom-walk\n1\t{1}\t{1}\t{1}\t{1}\n");
}

TEST_CASE("JSON emission") {
  auto r = optimumset(path3(), 1, MeasureKind::kCloseness);
  auto j = to_json(path3(), r, false);
  CHECK(j["measure"] == "closeness");
  CHECK(j["k"] == 1);
  CHECK(j["optimal_sets"].size() == 1);
  CHECK_FALSE(j.contains("wall_time_s"));
  CHECK(to_json(path3(), r, true).contains("wall_time_s"));

  auto h = hitting_time_set(path3(), VertexSet({2}, 3));
  auto hj = to_json(path3(), h);
  CHECK(hj["route"] == "absorbing-solve");

  RunManifest m{.command = "optimum", .input_digest = sha256_hex("x"), .seeds = {7}};
  auto mj = to_json(m);
  CHECK(mj["version"] == "0.1.0");
  CHECK(mj["seeds"][0] == 7);
}

TEST_CASE("ingest_triples") {
  auto a = ingest_triples("a rel b\nb rel c\nc other d\n", {"rel"});
  CHECK(a.graph.num_edges() == 2);
  CHECK(a.triples == 3);
  CHECK(a.matched == 2);

  auto b = ingest_triples("a rel a .\na rel b\n", {"rel"});
  CHECK(b.self_loops == 1);
  CHECK(b.graph.num_edges() == 1);

  auto c = ingest_triples("a p b\nb q a\n", {"p", "q"});
  CHECK(c.graph.num_edges() == 1);
  CHECK(c.duplicates == 1);

  CHECK(ingest_triples("a p b\n", {}).graph.num_edges() == 1);
  CHECK_THROWS_AS(ingest_triples("a p\n", {"p"}), InputError);

  auto once = write_edge_list(ingest_triples("x p y\ny p z\n", {}).graph, true);
  CHECK(write_edge_list(load_edge_list(once), true) == once);
}
