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

#include <string>
#include <vector>

#include "grpcent/graph.hpp"

#ifndef GRPCENT_DATA_DIR
#error "GRPCENT_DATA_DIR must point at the bundled fixtures"
#endif

inline std::string fixture(const std::string& name) {
  return std::string(GRPCENT_DATA_DIR) + "/" + name;
}

/// Fixture graph renumbered by the shared alphabetical label file.
inline grpcent::Graph fixture_graph(const std::string& name) {
  return grpcent::apply_labels(grpcent::load_edge_list_file(fixture(name)),
                               grpcent::load_labels_file(fixture("labels.tsv")));
}

inline grpcent::Graph path3() { return grpcent::load_edge_list("0 1\n1 2"); }
inline grpcent::Graph triangle() { return grpcent::load_edge_list("0 1\n0 2\n1 2"); }
inline grpcent::Graph k2() { return grpcent::load_edge_list("0 1"); }
inline grpcent::Graph cycle4() { return grpcent::load_edge_list("0 1\n1 2\n2 3\n3 0"); }
inline grpcent::Graph k4() {
  return grpcent::load_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
}
inline grpcent::Graph star3() { return grpcent::load_edge_list("0 1\n0 2\n0 3"); }

inline std::vector<grpcent::Vertex> ids(const grpcent::VertexSet& s) {
  return {s.members().begin(), s.members().end()};
}
