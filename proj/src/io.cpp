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

#include "grpcent/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>
#include <sstream>
#include <unordered_map>

#include "grpcent/error.hpp"
#include "grpcent/rng.hpp"

namespace grpcent {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> set_names(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (Vertex v : s.members()) out.push_back(g.name(v));
  return out;
}

}  // namespace

json to_json(const RunManifest& m) {
  return json{{"command", m.command},
              {"input_sha256", m.input_digest},
              {"seeds", m.seeds},
              {"rng", kRngAlgorithm},
              {"tolerances", m.tolerances},
              {"version", m.version},
              {"wall_time_s", m.wall_time_s}};
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1)
    throw Error("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

VertexSet parse_set_spec(const Graph& g, std::string_view spec) {
  std::vector<Vertex> members;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view tok = trim(spec.substr(pos, end - pos));
    pos = end + 1;
    if (tok.empty()) continue;
    if (auto v = g.find_label(tok)) {
      members.push_back(*v);
      continue;
    }
    Vertex id = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
    if (ec != std::errc() || ptr != tok.data() + tok.size() ||
        id >= g.num_vertices())
      throw InputError("unknown vertex `" + std::string(tok) + "`");
    members.push_back(id);
  }
  return VertexSet(std::move(members), g.num_vertices());
}

std::string render_set(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s.members()) {
    if (!first) out += ", ";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

json to_json(const Score& s) {
  json j{{"value", s.value}};
  if (s.exact) j["exact"] = s.exact->str();
  return j;
}

json to_json(const Graph& g, const HittingSolution& h) {
  json values = json::object();
  for (Vertex v = 0; v < g.num_vertices(); ++v) values[g.name(v)] = h.h[v];
  json j{{"target", set_names(g, h.target)},
         {"route", route_name(h.route)},
         {"hitting_times", values}};
  if (h.std_error) {
    json se = json::object();
    for (Vertex v = 0; v < g.num_vertices(); ++v) se[g.name(v)] = (*h.std_error)[v];
    j["std_error"] = se;
  }
  if (h.monte_carlo) {
    const auto& mc = *h.monte_carlo;
    j["monte_carlo"] = {{"seed", mc.seed},
                        {"rng", kRngAlgorithm},
                        {"walks_per_source", mc.walks_per_source},
                        {"max_steps", mc.max_steps},
                        {"total_walks", mc.total_walks},
                        {"truncated_walks", mc.truncated_walks}};
  }
  return j;
}

json to_json(const Graph& g, const OptimumResult& r, bool include_timing) {
  json sets = json::array(), ids = json::array();
  for (const auto& s : r.optimal_sets) {
    sets.push_back(set_names(g, s));
    ids.push_back(std::vector<Vertex>(s.members().begin(), s.members().end()));
  }
  json j{{"measure", measure_name(r.measure)},
         {"k", r.k},
         {"best_value", to_json(r.best_value)},
         {"optimal_sets", sets},
         {"optimal_set_ids", ids},
         {"count", r.optimal_sets.size()},
         {"evaluated", r.evaluated}};
  if (include_timing) j["wall_time_s"] = r.wall_time.count();
  return j;
}

json to_json(const Graph& g, const CrossMeasureReport& r, bool include_timing) {
  json rows = json::array();
  json jac = json::array();
  for (std::size_t k = 0; k < r.results.size(); ++k) {
    for (const auto& res : r.results[k]) rows.push_back(to_json(g, res, include_timing));
    json pairs = json::object();
    for (std::size_t p = 0; p < kMeasurePairs.size(); ++p) {
      std::string key(measure_name(kAllMeasures[kMeasurePairs[p].first]));
      key += "/";
      key += measure_name(kAllMeasures[kMeasurePairs[p].second]);
      pairs[key] = r.jaccard[k][p];
    }
    jac.push_back({{"k", k + 1}, {"pairs", pairs}});
  }
  return json{{"k_max", r.k_max}, {"rows", rows}, {"jaccard", jac}};
}

std::string render_optima_cell(const Graph& g, const OptimumResult& r,
                               std::size_t shown) {
  std::string out;
  const std::size_t count = r.optimal_sets.size();
  for (std::size_t i = 0; i < std::min(count, shown); ++i) {
    if (i) out += ", ";
    out += render_set(g, r.optimal_sets[i]);
  }
  if (count > shown) out += ", ... (" + std::to_string(count - shown) + ")";
  return out;
}

std::string report_tsv(const Graph& g, const CrossMeasureReport& r) {
  std::ostringstream os;
  os << "k\tdegree\tcloseness\tbetweenness\trandom-walk\n";
  for (std::size_t k = 0; k < r.results.size(); ++k) {
    os << k + 1;
    for (const auto& res : r.results[k]) os << '\t' << render_optima_cell(g, res);
    os << '\n';
  }
  return os.str();
}

std::vector<CentralityRow> centrality_scores(
    const Graph& g, const VertexSet& s, const std::vector<MeasureKind>& which) {
  if (!is_connected(g)) throw InputError("graph is not connected");
  std::vector<CentralityRow> rows;
  for (MeasureKind m : which) {
    switch (m) {
      case MeasureKind::kDegree: rows.push_back({m, group_degree(g, s)}); break;
      case MeasureKind::kCloseness: rows.push_back({m, group_closeness(g, s)}); break;
      case MeasureKind::kBetweenness:
        if (s.complement_size() >= 2) rows.push_back({m, group_betweenness(g, s)});
        break;
      case MeasureKind::kRandomWalk: rows.push_back({m, group_randomwalk(g, s)}); break;
    }
  }
  return rows;
}

std::string centrality_tsv(const std::vector<CentralityRow>& rows) {
  std::ostringstream os;
  os << "measure\tscore\n";
  for (const auto& r : rows) os << measure_name(r.measure) << '\t' << r.score.render() << '\n';
  return os.str();
}

json to_json(const std::vector<CentralityRow>& rows) {
  json j = json::array();
  for (const auto& r : rows)
    j.push_back({{"measure", measure_name(r.measure)}, {"score", to_json(r.score)}});
  return j;
}

IngestResult ingest_triples(std::string_view text,
                            const std::vector<std::string>& predicates) {
  const std::set<std::string, std::less<>> keep(predicates.begin(), predicates.end());
  IngestResult out;
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::set<std::pair<Vertex, Vertex>> pairs;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view term) {
    auto [it, fresh] = ids.emplace(std::string(term), static_cast<Vertex>(labels.size()));
    if (fresh) labels.emplace_back(term);
    return it->second;
  };

  std::size_t lineno = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> tok;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tok.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tok.size() == 4 && tok[3] == ".") tok.pop_back();
    if (tok.size() != 3)
      throw InputError("line " + std::to_string(lineno) +
                       ": expected `subject predicate object`");
    ++out.triples;
    if (!keep.empty() && !keep.contains(tok[1])) continue;
    ++out.matched;
    if (tok[0] == tok[2]) {
      ++out.self_loops;
      continue;
    }
    Vertex a = intern(tok[0]);
    Vertex b = intern(tok[2]);
    if (!pairs.insert(std::minmax(a, b)).second) {
      ++out.duplicates;
      continue;
    }
    edges.push_back({a, b, 1.0});
  }
  const std::size_t n = labels.size();
  out.graph = Graph(n, std::move(edges), std::move(labels));
  return out;
}

}  // namespace grpcent
