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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "grpcent/graph.hpp"
#include "grpcent/measures.hpp"
#include "grpcent/optimizer.hpp"
#include "grpcent/random_walk.hpp"

namespace grpcent {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Provenance attached to every emitted result.
struct RunManifest {
  std::string command;
  std::string input_digest;  // sha256 hex of the input bytes
  std::vector<std::uint64_t> seeds;
  std::map<std::string, double> tolerances;
  std::string version{kToolVersion};
  double wall_time_s = 0;
};

nlohmann::json to_json(const RunManifest& m);

std::string sha256_hex(std::string_view bytes);

/// Comma-separated labels or ids. Labels win when a token is both.
VertexSet parse_set_spec(const Graph& g, std::string_view spec);

/// "{a, b, c}" using vertex names.
std::string render_set(const Graph& g, const VertexSet& s);

nlohmann::json to_json(const Score& s);
nlohmann::json to_json(const Graph& g, const HittingSolution& h);
nlohmann::json to_json(const Graph& g, const OptimumResult& r,
                       bool include_timing = true);
nlohmann::json to_json(const Graph& g, const CrossMeasureReport& r,
                       bool include_timing = true);

/// Table cell: up to `shown` sets, then "... (n)" for the rest.
std::string render_optima_cell(const Graph& g, const OptimumResult& r,
                               std::size_t shown = 2);

/// One row per k; columns degree, closeness, betweenness, random-walk.
std::string report_tsv(const Graph& g, const CrossMeasureReport& r);

struct CentralityRow {
  MeasureKind measure;
  Score score;
};

/// Every requested measure on one set. Betweenness is skipped (reported
/// as an error row by callers) when fewer than two non-members remain.
std::vector<CentralityRow> centrality_scores(
    const Graph& g, const VertexSet& s, const std::vector<MeasureKind>& which);

std::string centrality_tsv(const std::vector<CentralityRow>& rows);
nlohmann::json to_json(const std::vector<CentralityRow>& rows);

struct IngestResult {
  Graph graph;
  std::size_t triples = 0;
  std::size_t matched = 0;
  std::size_t duplicates = 0;
  std::size_t self_loops = 0;
};

/// Whitespace-separated `subject predicate object [.]` lines; `#` lines are
/// comments. Keeps triples whose predicate is in `predicates` (all when
/// empty), drops self-loops, collapses repeated pairs regardless of
/// direction. Vertices are labeled by their terms in first-seen order.
IngestResult ingest_triples(std::string_view text,
                            const std::vector<std::string>& predicates);

}  // namespace grpcent
