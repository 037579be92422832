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

// grpcent: group centrality, optimal central sets and random-walk hitting
// times from the command line.
//
// Exit codes: 0 success, 2 input error, 3 budget exceeded, 4 numerical
// failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grpcent/error.hpp"
#include "grpcent/graph.hpp"
#include "grpcent/io.hpp"
#include "grpcent/measures.hpp"
#include "grpcent/optimizer.hpp"
#include "grpcent/random_walk.hpp"
#include "grpcent/sampling.hpp"

namespace {

using grpcent::InputError;
using nlohmann::json;

struct GlobalOptions {
  std::size_t workers = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000'000;
  std::string format = "tsv";
  double tolerance = 1e-9;
};

struct GraphInput {
  std::string path;
  std::string labels;
  bool weighted = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

struct Loaded {
  grpcent::Graph graph;
  std::string digest;
};

Loaded load(const GraphInput& in) {
  std::string bytes = slurp(in.path);
  auto g = grpcent::load_edge_list(bytes, {.weighted = in.weighted});
  if (!in.labels.empty()) {
    std::string lbytes = slurp(in.labels);
    g = grpcent::apply_labels(g, grpcent::parse_labels(lbytes));
    bytes += lbytes;
  }
  return {std::move(g), grpcent::sha256_hex(bytes)};
}

std::vector<grpcent::MeasureKind> parse_measures(const std::vector<std::string>& names) {
  if (names.empty() || (names.size() == 1 && names[0] == "all"))
    return {grpcent::kAllMeasures.begin(), grpcent::kAllMeasures.end()};
  std::vector<grpcent::MeasureKind> out;
  for (const auto& n : names) {
    auto m = grpcent::parse_measure(n);
    if (!m) throw InputError("unknown measure `" + n + "`");
    out.push_back(*m);
  }
  return out;
}

grpcent::RunManifest manifest(const std::string& command, const std::string& digest,
                              const GlobalOptions& opt,
                              std::chrono::steady_clock::time_point start) {
  grpcent::RunManifest m;
  m.command = command;
  m.input_digest = digest;
  m.seeds = {opt.seed};
  m.tolerances = {{"tie_relative", opt.tolerance}};
  m.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return m;
}

void emit(const GlobalOptions& opt, const grpcent::RunManifest& m,
          const json& result, const std::string& tsv) {
  if (opt.format == "json") {
    std::cout << json{{"manifest", grpcent::to_json(m)}, {"result", result}}.dump(2)
              << '\n';
  } else {
    std::cout << "# manifest: " << grpcent::to_json(m).dump() << '\n' << tsv;
  }
}

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("graph", in.path, "Edge-list file (`u v [w]` per line)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--labels", in.labels, "Label file (`index<TAB>label`)")
      ->check(CLI::ExistingFile);
  cmd->add_flag("--weighted", in.weighted, "Require a weight column");
}

int run(int argc, char** argv) {
  CLI::App app{"Group centrality on undirected graphs"};
  app.require_subcommand(1);
  GlobalOptions opt;
  app.add_option("--workers", opt.workers, "Worker threads (0 = all cores)");
  app.add_option("--seed", opt.seed, "Random seed");
  app.add_option("--budget", opt.budget, "Maximum subsets to enumerate");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--tolerance", opt.tolerance,
                 "Relative tie tolerance for betweenness and random-walk");
  app.fallthrough();

  GraphInput gin;
  std::string set_spec;
  std::vector<std::string> measure_names;

  auto* centrality = app.add_subcommand("centrality", "Score one vertex set");
  add_graph_options(centrality, gin);
  centrality->add_option("--set", set_spec, "Comma-separated ids or labels")->required();
  centrality->add_option("--measures", measure_names, "Measures (default all)")
      ->delimiter(',');

  std::size_t k = 1;
  bool single_k = false;
  auto* optimum = app.add_subcommand("optimum", "Optimal size-k sets by enumeration");
  add_graph_options(optimum, gin);
  optimum->add_option("-k,--k", k, "Largest set size (rows 1..k)")->required();
  optimum->add_flag("--only-k", single_k, "Only compute size k");
  optimum->add_option("--measures", measure_names, "Measures (default all)")
      ->delimiter(',');

  std::string route = "absorbing";
  std::uint64_t walks = 100000;
  std::uint64_t max_steps = 0;
  auto* hitting = app.add_subcommand("hitting", "Hitting times to a vertex set");
  add_graph_options(hitting, gin);
  hitting->add_option("--set", set_spec, "Comma-separated ids or labels")->required();
  hitting->add_option("--route", route, "absorbing | contraction | montecarlo")
      ->check(CLI::IsMember({"absorbing", "contraction", "montecarlo"}));
  hitting->add_option("--walks", walks, "Monte-Carlo walks per source");
  hitting->add_option("--max-steps", max_steps, "Walk cap (0 = 100 n^2)");

  grpcent::SampleConfig scfg;
  std::string out_prefix;
  auto* sample = app.add_subcommand("sample", "Random-walk sample + induced subgraph");
  add_graph_options(sample, gin);
  sample->add_option("--target", scfg.target_nodes, "Distinct vertices to collect");
  sample->add_option("--restart", scfg.restart_probability, "Restart probability");
  sample->add_option("--step-budget", scfg.step_budget, "Maximum walk steps");
  sample->add_option("--out", out_prefix, "Writes PREFIX.edges and PREFIX.map")
      ->required();

  grpcent::FamilyParams fp;
  std::string family_out;
  auto* family = app.add_subcommand("family", "Generate the clique/star hub family");
  family->add_option("-n", fp.n, "Clique and star size")->required();
  family->add_option("-m", fp.m, "Number of cliques and of stars")->required();
  family->add_option("--out", family_out, "Edge-list output file");

  std::string triples_path;
  std::vector<std::string> predicates;
  std::string ingest_out;
  auto* ingest = app.add_subcommand("ingest", "Triples to an undirected edge list");
  ingest->add_option("triples", triples_path, "Triple file")
      ->required()
      ->check(CLI::ExistingFile);
  ingest->add_option("--predicate", predicates, "Predicate to keep (repeatable)");
  ingest->add_option("--out", ingest_out, "Edge-list output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();

  if (*centrality) {
    auto in = load(gin);
    auto s = grpcent::parse_set_spec(in.graph, set_spec);
    auto rows = grpcent::centrality_scores(in.graph, s, parse_measures(measure_names));
    emit(opt, manifest("centrality", in.digest, opt, start),
         {{"set", grpcent::render_set(in.graph, s)}, {"scores", grpcent::to_json(rows)}},
         grpcent::centrality_tsv(rows));
    return 0;
  }

  if (*optimum) {
    auto in = load(gin);
    const auto measures = parse_measures(measure_names);
    grpcent::OptimizerConfig cfg{opt.workers, opt.budget, opt.tolerance};
    const bool all_four = measures.size() == 4 &&
                          std::equal(measures.begin(), measures.end(),
                                     grpcent::kAllMeasures.begin());
    if (all_four && !single_k) {
      auto rep = grpcent::cross_measure_report(in.graph, k, cfg);
      emit(opt, manifest("optimum", in.digest, opt, start),
           grpcent::to_json(in.graph, rep), grpcent::report_tsv(in.graph, rep));
      return 0;
    }
    json rows = json::array();
    std::ostringstream tsv;
    tsv << "k";
    for (auto m : measures) tsv << '\t' << grpcent::measure_name(m);
    tsv << '\n';
    for (std::size_t kk = single_k ? k : 1; kk <= k; ++kk) {
      tsv << kk;
      for (auto m : measures) {
        auto r = grpcent::optimumset(in.graph, kk, m, cfg);
        rows.push_back(grpcent::to_json(in.graph, r));
        tsv << '\t' << grpcent::render_optima_cell(in.graph, r);
      }
      tsv << '\n';
    }
    emit(opt, manifest("optimum", in.digest, opt, start), {{"rows", rows}}, tsv.str());
    return 0;
  }

  if (*hitting) {
    auto in = load(gin);
    auto s = grpcent::parse_set_spec(in.graph, set_spec);
    if (!grpcent::is_connected(in.graph)) throw InputError("graph is not connected");
    grpcent::HittingSolution sol;
    if (route == "montecarlo") {
      grpcent::MonteCarloConfig mc;
      mc.walks_per_source = walks;
      mc.max_steps = max_steps;
      mc.seed = opt.seed;
      mc.workers = opt.workers;
      sol = grpcent::monte_carlo_hitting(in.graph, s, mc);
    } else {
      sol = grpcent::hitting_time_set(in.graph, s, *grpcent::parse_route(route));
    }
    auto m = manifest("hitting", in.digest, opt, start);
    std::cout << json{{"manifest", grpcent::to_json(m)},
                      {"result", grpcent::to_json(in.graph, sol)}}
                     .dump(2)
              << '\n';
    return 0;
  }

  if (*sample) {
    auto in = load(gin);
    scfg.seed = opt.seed;
    auto res = grpcent::random_walk_sample(in.graph, scfg);
    write_file(out_prefix + ".edges", grpcent::write_edge_list(res.graph));
    write_file(out_prefix + ".map", grpcent::write_sample_mapping(in.graph, res));
    auto m = manifest("sample", in.digest, opt, start);
    std::cout << json{{"manifest", grpcent::to_json(m)},
                      {"result",
                       {{"vertices", res.graph.num_vertices()},
                        {"edges", res.graph.num_edges()},
                        {"start", res.start},
                        {"steps", res.steps},
                        {"distinct_visited", res.distinct_visited},
                        {"reduced_to_component", res.reduced_to_component},
                        {"restart_probability", scfg.restart_probability}}}}
                     .dump(2)
              << '\n';
    return 0;
  }

  if (*family) {
    auto f = grpcent::generate_family(fp);
    const std::string text = grpcent::write_edge_list(f.graph, true);
    if (!family_out.empty()) write_file(family_out, text);
    else std::cout << text;
    std::cerr << "clique landmarks = " << grpcent::render_set(f.graph, f.clique_landmarks())
              << "\nstar landmarks = " << grpcent::render_set(f.graph, f.star_landmarks()) << '\n';
    return 0;
  }

  if (*ingest) {
    const std::string bytes = slurp(triples_path);
    auto res = grpcent::ingest_triples(bytes, predicates);
    const std::string text = grpcent::write_edge_list(res.graph, true);
    if (!ingest_out.empty()) write_file(ingest_out, text);
    else std::cout << text;
    std::cerr << "triples " << res.triples << ", matched " << res.matched
              << ", edges " << res.graph.num_edges() << ", duplicates collapsed "
              << res.duplicates << ", self-loops dropped " << res.self_loops << '\n';
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const grpcent::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
