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

#include "grpcent/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "grpcent/error.hpp"

namespace grpcent {

namespace {

std::string line_error(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> parse_index(std::string_view tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::optional<double> parse_double(std::string_view tok) {
  // from_chars for double is available in libstdc++ 11.
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos)
    line = line.substr(0, pos);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : adjacency_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n)
    throw InputError("label count " + std::to_string(labels_.size()) +
                     " does not match vertex count " + std::to_string(n));
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw InputError("edge endpoint out of range: " + std::to_string(e.u) +
                       " " + std::to_string(e.v));
    if (e.u == e.v)
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (!(e.weight > 0) || !std::isfinite(e.weight))
      throw InputError("non-positive weight on edge " + std::to_string(e.u) +
                       " " + std::to_string(e.v));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw InputError("duplicate edge " + std::to_string(edges[i].u) + " " +
                       std::to_string(edges[i].v));
  }
  for (const auto& e : edges) {
    adjacency_[e.u].push_back({e.v, e.weight});
    adjacency_[e.v].push_back({e.u, e.weight});
    if (e.weight != 1.0) weighted_ = true;
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end(), [](const Neighbor& a, const Neighbor& b) {
      return a.vertex < b.vertex;
    });
  }
  edges_ = std::move(edges);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return edge_weight(u, v).has_value();
}

std::optional<double> Graph::edge_weight(Vertex u, Vertex v) const {
  const auto& nb = adjacency_.at(u);
  auto it = std::lower_bound(
      nb.begin(), nb.end(), v,
      [](const Neighbor& a, Vertex x) { return a.vertex < x; });
  if (it == nb.end() || it->vertex != v) return std::nullopt;
  return it->weight;
}

std::string Graph::name(Vertex u) const {
  if (has_labels()) return labels_.at(u);
  return std::to_string(u);
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Vertex>(i);
  return std::nullopt;
}

Graph Graph::scaled(double factor) const {
  std::vector<Edge> e(edges_.begin(), edges_.end());
  for (auto& x : e) x.weight *= factor;
  return Graph(num_vertices(), std::move(e), labels_);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  return Graph(num_vertices(), {edges_.begin(), edges_.end()},
               std::move(labels));
}

VertexSet::VertexSet(std::vector<Vertex> members, std::size_t universe)
    : members_(std::move(members)), universe_(universe) {
  if (members_.empty()) throw InputError("vertex set must be nonempty");
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= universe_)
      throw InputError("vertex " + std::to_string(members_[i]) +
                       " outside graph of size " + std::to_string(universe_));
    if (i > 0 && members_[i] == members_[i - 1])
      throw InputError("duplicate vertex " + std::to_string(members_[i]) +
                       " in set");
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSet::mask() const {
  std::vector<char> m(universe_, 0);
  for (Vertex v : members_) m[v] = 1;
  return m;
}

std::vector<Vertex> VertexSet::complement() const {
  std::vector<Vertex> out;
  out.reserve(complement_size());
  std::size_t j = 0;
  for (Vertex v = 0; v < universe_; ++v) {
    if (j < members_.size() && members_[j] == v) {
      ++j;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

Graph load_edge_list(std::string_view text, EdgeListOptions opts) {
  struct RawEdge {
    std::string_view a, b;
    double w;
  };
  std::vector<RawEdge> raw;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip_comment(text.substr(pos, end - pos));
    pos = end + 1;
    ++lineno;
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() < 2 || tok.size() > 3)
      throw InputError(line_error(lineno, "expected `u v [w]`, got " +
                                              std::to_string(tok.size()) +
                                              " fields"));
    if (opts.weighted && tok.size() != 3)
      throw InputError(line_error(lineno, "missing weight column"));
    double w = 1.0;
    if (tok.size() == 3) {
      auto parsed = parse_double(tok[2]);
      if (!parsed)
        throw InputError(line_error(lineno, "bad weight `" +
                                                std::string(tok[2]) + "`"));
      if (!(*parsed > 0) || !std::isfinite(*parsed))
        throw InputError(line_error(lineno, "non-positive weight"));
      w = *parsed;
    }
    if (tok[0] == tok[1])
      throw InputError(line_error(lineno, "self-loop at `" +
                                              std::string(tok[0]) + "`"));
    raw.push_back({tok[0], tok[1], w});
  }

  bool numeric = std::all_of(raw.begin(), raw.end(), [](const RawEdge& e) {
    return parse_index(e.a) && parse_index(e.b);
  });

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::vector<std::string> labels;
  std::size_t n = 0;
  if (numeric) {
    for (const auto& e : raw) {
      auto a = *parse_index(e.a), b = *parse_index(e.b);
      if (a > std::numeric_limits<Vertex>::max() - 1 ||
          b > std::numeric_limits<Vertex>::max() - 1)
        throw InputError("vertex id too large");
      n = std::max<std::size_t>(n, std::max(a, b) + 1);
      edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), e.w});
    }
  } else {
    std::unordered_map<std::string_view, Vertex> ids;
    auto intern = [&](std::string_view s) {
      auto [it, fresh] = ids.emplace(s, static_cast<Vertex>(labels.size()));
      if (fresh) labels.emplace_back(s);
      return it->second;
    };
    for (const auto& e : raw) {
      Vertex a = intern(e.a);
      Vertex b = intern(e.b);
      edges.push_back({a, b, e.w});
    }
    n = labels.size();
  }

  // Report duplicates with the offending line rather than canonical ids.
  std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto key = std::minmax(edges[i].u, edges[i].v);
    if (!seen.emplace(key, i).second)
      throw InputError("duplicate edge `" + std::string(raw[i].a) + " " +
                       std::string(raw[i].b) + "`");
  }
  return Graph(n, std::move(edges), std::move(labels));
}

Graph load_edge_list_file(const std::string& path, EdgeListOptions opts) {
  return load_edge_list(read_file(path), opts);
}

std::vector<std::pair<Vertex, std::string>> parse_labels(
    std::string_view text) {
  std::vector<std::pair<Vertex, std::string>> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw InputError(line_error(lineno, "expected `index<TAB>label`"));
    auto idx = parse_index(line.substr(0, tab));
    std::string_view label = line.substr(tab + 1);
    if (!idx || label.empty())
      throw InputError(line_error(lineno, "expected `index<TAB>label`"));
    out.emplace_back(static_cast<Vertex>(*idx), std::string(label));
  }
  return out;
}

std::vector<std::pair<Vertex, std::string>> load_labels_file(
    const std::string& path) {
  return parse_labels(read_file(path));
}

Graph apply_labels(const Graph& g,
                   std::span<const std::pair<Vertex, std::string>> labels) {
  const std::size_t n = g.num_vertices();
  if (labels.size() != n)
    throw InputError("label file has " + std::to_string(labels.size()) +
                     " entries for " + std::to_string(n) + " vertices");
  std::vector<std::string> by_index(n);
  std::vector<char> used(n, 0);
  for (const auto& [idx, label] : labels) {
    if (idx >= n) throw InputError("label index out of range: " +
                                   std::to_string(idx));
    if (used[idx]) throw InputError("label index repeated: " +
                                    std::to_string(idx));
    used[idx] = 1;
    by_index[idx] = label;
  }
  if (!g.has_labels()) return g.with_labels(std::move(by_index));

  // Renumber: old vertex with label L moves to the index assigned to L.
  std::vector<Vertex> remap(n);
  std::vector<char> hit(n, 0);
  for (Vertex idx = 0; idx < n; ++idx) {
    auto old = g.find_label(by_index[idx]);
    if (!old) throw InputError("unknown label `" + by_index[idx] + "`");
    if (hit[*old]) throw InputError("label repeated: `" + by_index[idx] + "`");
    hit[*old] = 1;
    remap[*old] = idx;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({remap[e.u], remap[e.v], e.weight});
  return Graph(n, std::move(edges), std::move(by_index));
}

std::string write_edge_list(const Graph& g, bool use_labels) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (const auto& e : g.edges()) {
    if (use_labels && g.has_labels())
      os << g.name(e.u) << ' ' << g.name(e.v);
    else
      os << e.u << ' ' << e.v;
    if (g.is_weighted()) os << ' ' << e.weight;
    os << '\n';
  }
  return os.str();
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  return largest_component(g).size() == g.num_vertices();
}

DistanceField multi_source_distances(const Graph& g, const VertexSet& s) {
  if (s.size() == 0) throw InputError("empty source set");
  if (s.universe() != g.num_vertices())
    throw InputError("vertex set does not belong to this graph");
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue(s.members().begin(), s.members().end());
  for (Vertex v : queue) dist[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (const auto& nb : g.neighbors(u)) {
      if (dist[nb.vertex] == kUnreachable) {
        dist[nb.vertex] = dist[u] + 1;
        queue.push_back(nb.vertex);
      }
    }
  }
  return {s, std::move(dist)};
}

PathCounts shortest_path_counts(const Graph& g, Vertex source) {
  const std::size_t n = g.num_vertices();
  if (source >= n) throw InputError("source out of range");
  PathCounts pc{source, std::vector<std::uint32_t>(n, kUnreachable),
                std::vector<std::uint64_t>(n, 0)};
  std::vector<Vertex> queue{source};
  queue.reserve(n);
  pc.dist[source] = 0;
  pc.sigma[source] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (const auto& nb : g.neighbors(u)) {
      Vertex w = nb.vertex;
      if (pc.dist[w] == kUnreachable) {
        pc.dist[w] = pc.dist[u] + 1;
        queue.push_back(w);
      }
      if (pc.dist[w] == pc.dist[u] + 1) {
        if (__builtin_add_overflow(pc.sigma[w], pc.sigma[u], &pc.sigma[w]))
          throw NumericalError("shortest-path count overflows 64 bits at vertex " +
                               std::to_string(w));
      }
    }
  }
  return pc;
}

double weighted_degree(const Graph& g, Vertex u) {
  double sum = 0;
  for (const auto& nb : g.neighbors(u)) sum += nb.weight;
  return sum;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(g.num_vertices(), kUnreachable);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.num_vertices()) throw InputError("vertex out of range");
    if (index[keep[i]] != kUnreachable)
      throw InputError("duplicate vertex in induced set");
    index[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (index[e.u] != kUnreachable && index[e.v] != kUnreachable)
      edges.push_back({index[e.u], index[e.v], e.weight});
  }
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Vertex v : keep) labels.push_back(g.name(v));
  return Graph(keep.size(), std::move(edges), std::move(labels));
}

std::vector<Vertex> largest_component(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> comp(n, kUnreachable);
  std::vector<std::size_t> sizes;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != kUnreachable) continue;
    auto id = static_cast<std::uint32_t>(sizes.size());
    queue.assign(1, s);
    comp[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& nb : g.neighbors(queue[head])) {
        if (comp[nb.vertex] == kUnreachable) {
          comp[nb.vertex] = id;
          queue.push_back(nb.vertex);
        }
      }
    }
    sizes.push_back(queue.size());
  }
  if (sizes.empty()) return {};
  // max_element returns the first maximum, i.e. the smallest-id component.
  auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (comp[v] == best) out.push_back(v);
  return out;
}

}  // namespace grpcent
