// Copyright 2026 The fourcycle Authors
//
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

#include "fourcycle/graph.h"

#include <algorithm>
#include <charconv>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>

#include "fourcycle/errors.h"

namespace fourcycle {
namespace {

void require_vertex_count(std::uint64_t n) {
  if (n > kMaxVertexCount) {
    throw Error(ErrorCode::kOverflow,
                "vertex count " + std::to_string(n) + " exceeds the 32-bit vertex type");
  }
}

// `edges` must hold (lo, hi) pairs with lo < hi, sorted and unique. The
// resulting neighbor lists are sorted by ID.
std::pair<std::vector<EdgeOffset>, std::vector<Vertex>> csr_from_canonical(
    std::uint64_t n, const std::vector<Edge>& edges) {
  std::vector<EdgeOffset> offsets(n + 1, 0);
  for (const Edge& e : edges) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::uint64_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];

  std::vector<Vertex> adjacency(offsets[n]);
  std::vector<EdgeOffset> cursor(offsets.begin(), offsets.end() - 1);
  // Pairs (x, v) with x < v are visited before any (v, w), so each list
  // receives its smaller neighbors first, both halves in ascending order.
  for (const Edge& e : edges) {
    adjacency[cursor[e.u]++] = e.v;
    adjacency[cursor[e.v]++] = e.u;
  }
  return {std::move(offsets), std::move(adjacency)};
}

// Canonicalizes in place; returns (duplicates, self_loops) removed.
std::pair<std::uint64_t, std::uint64_t> canonicalize(std::vector<Edge>& edges) {
  std::uint64_t self_loops = 0;
  std::size_t kept = 0;
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      ++self_loops;
      continue;
    }
    edges[kept++] = {std::min(e.u, e.v), std::max(e.u, e.v)};
  }
  edges.resize(kept);
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  auto last = std::unique(edges.begin(), edges.end());
  std::uint64_t duplicates = static_cast<std::uint64_t>(edges.end() - last);
  edges.erase(last, edges.end());
  return {duplicates, self_loops};
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::uint64_t parse_id(std::string_view token, std::uint64_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(ErrorCode::kOverflow, "line " + std::to_string(line_no) +
                                          ": vertex ID '" + std::string(token) +
                                          "' overflows a 64-bit word");
  }
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                       ": malformed vertex ID '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::uint64_t Graph::max_degree() const {
  std::uint64_t best = 0;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) {
    best = std::max(best, offsets_[v + 1] - offsets_[v]);
  }
  return best;
}

Graph Graph::from_edges(std::uint64_t n, std::vector<Edge> edges) {
  require_vertex_count(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} references a vertex outside 0.." + std::to_string(n) + "-1");
    }
  }
  canonicalize(edges);
  auto [offsets, adjacency] = csr_from_canonical(n, edges);
  return Graph(std::move(offsets), std::move(adjacency));
}

Graph Graph::from_csr(std::vector<EdgeOffset> offsets, std::vector<Vertex> adjacency) {
  if (offsets.empty() || offsets.front() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "offsets must start at 0");
  }
  const std::uint64_t n = offsets.size() - 1;
  require_vertex_count(n);
  if (offsets.back() != adjacency.size()) {
    throw Error(ErrorCode::kInvalidArgument, "offsets[n] must equal the adjacency length");
  }
  std::vector<Edge> directed;
  directed.reserve(adjacency.size());
  for (std::uint64_t v = 0; v < n; ++v) {
    if (offsets[v + 1] < offsets[v]) {
      throw Error(ErrorCode::kInvalidArgument, "offsets must be non-decreasing");
    }
    for (EdgeOffset i = offsets[v]; i < offsets[v + 1]; ++i) {
      const Vertex u = adjacency[i];
      if (u >= n) {
        throw Error(ErrorCode::kInvalidArgument, "adjacency entry out of range");
      }
      if (u == v) {
        throw Error(ErrorCode::kInvalidArgument,
                    "self-loop at vertex " + std::to_string(v));
      }
      directed.push_back({static_cast<Vertex>(v), u});
    }
  }
  auto by_pair = [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  };
  std::sort(directed.begin(), directed.end(), by_pair);
  if (std::adjacent_find(directed.begin(), directed.end()) != directed.end()) {
    throw Error(ErrorCode::kInvalidArgument, "repeated neighbor in an adjacency list");
  }
  for (const Edge& e : directed) {
    if (!std::binary_search(directed.begin(), directed.end(), Edge{e.v, e.u}, by_pair)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "adjacency is not symmetric at {" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + "}");
    }
  }
  return Graph(std::move(offsets), std::move(adjacency));
}

bool DegreeOrder::precedes(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) {
    throw Error(ErrorCode::kInvalidArgument, "vertex out of range in degree order");
  }
  return rank(u) < rank(v);
}

SortedGraph preprocess_sort(const Graph& g) {
  const DegreeOrder order(g);
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> adjacency(g.adjacency().begin(), g.adjacency().end());
  std::vector<Vertex> lower_count(n);
  for (Vertex v = 0; v < n; ++v) {
    auto first = adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets()[v]);
    auto last = adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets()[v + 1]);
    const std::uint64_t rank_v = order.rank(v);
    auto split = std::stable_partition(
        first, last, [&](Vertex u) { return order.rank(u) < rank_v; });
    std::sort(split, last,
              [&](Vertex a, Vertex b) { return order.rank(a) < order.rank(b); });
    lower_count[v] = static_cast<Vertex>(split - first);
  }
  std::vector<EdgeOffset> offsets(g.offsets().begin(), g.offsets().end());
  return SortedGraph(Graph(std::move(offsets), std::move(adjacency)),
                     std::move(lower_count));
}

LoadResult load_edge_list(std::istream& in, const LoadOptions& options) {
  LoadReport report;
  report.remapped = options.remap_ids;

  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, Vertex> remap;
  std::uint64_t max_id = 0;
  bool any_id = false;

  auto map_id = [&](std::uint64_t raw, std::uint64_t line_no) -> Vertex {
    if (options.remap_ids) {
      auto [it, inserted] = remap.try_emplace(raw, static_cast<Vertex>(remap.size()));
      if (inserted && remap.size() > kMaxVertexCount) {
        throw Error(ErrorCode::kOverflow, "line " + std::to_string(line_no) +
                                              ": too many distinct vertex IDs");
      }
      return it->second;
    }
    if (raw >= kMaxVertexCount) {
      throw Error(ErrorCode::kOverflow, "line " + std::to_string(line_no) + ": vertex ID " +
                                            std::to_string(raw) +
                                            " exceeds the 32-bit vertex type");
    }
    return static_cast<Vertex>(raw);
  };

  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::string_view tokens[3];
    std::size_t count = 0;
    while (true) {
      std::size_t start = 0;
      while (start < rest.size() && is_space(rest[start])) ++start;
      rest.remove_prefix(start);
      if (rest.empty()) break;
      if (rest.front() == '#') break;
      std::size_t end = 0;
      while (end < rest.size() && !is_space(rest[end])) ++end;
      if (count == 3) break;
      tokens[count++] = rest.substr(0, end);
      rest.remove_prefix(end);
    }
    if (count == 0) continue;
    if (count != 2) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) +
                                         ": expected two vertex IDs");
    }
    const std::uint64_t raw_u = parse_id(tokens[0], line_no);
    const std::uint64_t raw_v = parse_id(tokens[1], line_no);
    const Vertex u = map_id(raw_u, line_no);
    const Vertex v = map_id(raw_v, line_no);
    if (u == v && options.strict) {
      throw Error(ErrorCode::kRejected,
                  "line " + std::to_string(line_no) + ": self-loop at " + std::to_string(raw_u));
    }
    max_id = std::max({max_id, std::uint64_t{u}, std::uint64_t{v}});
    any_id = true;
    edges.push_back({u, v});
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIo, "read error while loading edge list");
  }

  const std::uint64_t n = options.remap_ids ? remap.size() : (any_id ? max_id + 1 : 0);
  if (options.remap_ids) {
    report.vertices_seen = n;
  } else {
    std::vector<bool> seen(n, false);
    for (const Edge& e : edges) {
      seen[e.u] = true;
      seen[e.v] = true;
    }
    report.vertices_seen = static_cast<std::uint64_t>(std::count(seen.begin(), seen.end(), true));
  }

  auto [duplicates, self_loops] = canonicalize(edges);
  if (duplicates > 0 && options.strict) {
    throw Error(ErrorCode::kRejected,
                std::to_string(duplicates) + " duplicate edge(s) in strict mode");
  }
  report.duplicates_dropped = duplicates;
  report.self_loops_dropped = self_loops;
  report.edges_kept = edges.size();

  auto [offsets, adjacency] = csr_from_canonical(n, edges);
  return {Graph::from_csr(std::move(offsets), std::move(adjacency)), report};
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (v < u) out << v << ' ' << u << '\n';
    }
  }
}

Graph gen_grid(std::uint64_t rows, std::uint64_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "grid dimensions must be positive");
  }
  std::uint64_t n = 0;
  if (__builtin_mul_overflow(rows, cols, &n) || n > kMaxVertexCount) {
    throw Error(ErrorCode::kOverflow, "grid vertex count overflows the vertex type");
  }
  // 2m = 2 * ((R-1)C + R(C-1)) < 4n, which fits comfortably in 64 bits.
  const std::uint64_t half_edges = 2 * ((rows - 1) * cols + rows * (cols - 1));

  std::vector<EdgeOffset> offsets(n + 1);
  std::vector<Vertex> adjacency(half_edges);
  EdgeOffset pos = 0;
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::uint64_t c = 0; c < cols; ++c) {
      const std::uint64_t id = r * cols + c;
      offsets[id] = pos;
      if (r > 0) adjacency[pos++] = static_cast<Vertex>(id - cols);
      if (c > 0) adjacency[pos++] = static_cast<Vertex>(id - 1);
      if (c + 1 < cols) adjacency[pos++] = static_cast<Vertex>(id + 1);
      if (r + 1 < rows) adjacency[pos++] = static_cast<Vertex>(id + cols);
    }
  }
  offsets[n] = pos;
  return Graph(std::move(offsets), std::move(adjacency));
}

Graph gen_clique(std::uint64_t k) {
  std::vector<Edge> edges;
  for (std::uint64_t a = 0; a < k; ++a) {
    for (std::uint64_t b = a + 1; b < k; ++b) {
      edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
  }
  return Graph::from_edges(k, std::move(edges));
}

Graph gen_erdos_renyi(std::uint64_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "edge probability must lie in [0, 1]");
  }
  require_vertex_count(n);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = a + 1; b < n; ++b) {
      // 53 uniform bits; avoids distribution classes whose output is
      // implementation-defined.
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph permute_adjacency(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> adjacency(g.adjacency().begin(), g.adjacency().end());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto first = adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets()[v]);
    auto last = adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets()[v + 1]);
    // Fisher-Yates with a fixed reduction so the permutation is portable.
    for (auto i = last - first; i > 1; --i) {
      const auto j = static_cast<std::ptrdiff_t>(rng() % static_cast<std::uint64_t>(i));
      std::iter_swap(first + (i - 1), first + j);
    }
  }
  return Graph::from_csr(std::vector<EdgeOffset>(g.offsets().begin(), g.offsets().end()),
                         std::move(adjacency));
}

double avg_degeneracy(const Graph& g) {
  if (g.num_edges() == 0) {
    throw Error(ErrorCode::kUndefined, "average degeneracy is undefined for a graph with no edges");
  }
  std::uint64_t sum = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::uint64_t dv = g.degree(v);
    for (Vertex u : g.neighbors(v)) {
      if (v < u) sum += std::min(dv, g.degree(u));
    }
  }
  return static_cast<double>(sum) / static_cast<double>(g.num_edges());
}

}  // namespace fourcycle
