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

// Immutable CSR storage for simple undirected graphs, plus the degree order
// used by every counting pass.

#ifndef FOURCYCLE_GRAPH_H_
#define FOURCYCLE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <vector>

namespace fourcycle {

using Vertex = std::uint32_t;
using EdgeOffset = std::uint64_t;

// Largest representable vertex count. IDs run 0..kMaxVertexCount-1.
inline constexpr std::uint64_t kMaxVertexCount =
    std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Compressed sparse row graph. Both directions of every undirected edge are
 * stored, so the adjacency array holds 2m half-edges and
 * N(v) = adjacency[offsets[v] .. offsets[v+1]).
 *
 * Instances are always simple (no self-loops, no repeated neighbors) and
 * symmetric; every factory validates or constructs that.
 */
class SortedGraph;

class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Builds a graph on `n` vertices. Self-loops and repeated edges (in either
  // direction) are dropped. Neighbor lists come out sorted by ID.
  static Graph from_edges(std::uint64_t n, std::vector<Edge> edges);

  // Adopts raw CSR arrays, validating every structural invariant. Neighbor
  // lists may be in any order.
  static Graph from_csr(std::vector<EdgeOffset> offsets,
                        std::vector<Vertex> adjacency);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::uint64_t num_edges() const { return adjacency_.size() / 2; }
  std::uint64_t num_half_edges() const { return adjacency_.size(); }

  std::uint64_t degree(Vertex v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::span<const EdgeOffset> offsets() const { return offsets_; }
  std::span<const Vertex> adjacency() const { return adjacency_; }

  std::uint64_t max_degree() const;

 private:
  Graph(std::vector<EdgeOffset> offsets, std::vector<Vertex> adjacency)
      : offsets_(std::move(offsets)), adjacency_(std::move(adjacency)) {}

  friend Graph gen_grid(std::uint64_t, std::uint64_t);
  friend class SortedGraph;
  friend SortedGraph preprocess_sort(const Graph&);

  std::vector<EdgeOffset> offsets_;
  std::vector<Vertex> adjacency_;
};

// Total order on vertices: by degree, ties broken by vertex ID.
class DegreeOrder {
 public:
  explicit DegreeOrder(const Graph& g) : offsets_(g.offsets().data()), n_(g.num_vertices()) {}

  // Packs (degree, id) so that u precedes v iff rank(u) < rank(v).
  std::uint64_t rank(Vertex v) const {
    return ((offsets_[v + 1] - offsets_[v]) << 32) | v;
  }

  // Range-checked comparison; throws kInvalidArgument on a bad vertex.
  bool precedes(Vertex u, Vertex v) const;

 private:
  const EdgeOffset* offsets_;
  std::size_t n_;
};

/**
 * A graph whose neighbor lists are partitioned as N-(v) followed by N+(v),
 * where N-(v) holds the neighbors that precede v (stable input order) and
 * N+(v) the neighbors that succeed v, sorted ascending by the degree order.
 * Only preprocess_sort() creates one.
 */
class SortedGraph {
 public:
  const Graph& graph() const { return graph_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }

  std::span<const Vertex> lower(Vertex v) const {
    return graph_.neighbors(v).first(lower_count_[v]);
  }
  std::span<const Vertex> upper(Vertex v) const {
    return graph_.neighbors(v).subspan(lower_count_[v]);
  }

 private:
  SortedGraph(Graph g, std::vector<Vertex> lower_count)
      : graph_(std::move(g)), lower_count_(std::move(lower_count)) {}

  friend SortedGraph preprocess_sort(const Graph& g);

  Graph graph_;
  std::vector<Vertex> lower_count_;
};

SortedGraph preprocess_sort(const Graph& g);

struct LoadOptions {
  bool strict = false;
  bool remap_ids = false;
};

struct LoadReport {
  std::uint64_t vertices_seen = 0;
  std::uint64_t edges_kept = 0;
  std::uint64_t duplicates_dropped = 0;
  std::uint64_t self_loops_dropped = 0;
  bool remapped = false;
};

struct LoadResult {
  Graph graph;
  LoadReport report;
};

// Parses whitespace-separated "u v" lines. Blank lines and lines starting
// with '#' are skipped.
LoadResult load_edge_list(std::istream& in, const LoadOptions& options = {});

// Writes one "u v" line per undirected edge (u < v), in CSR order.
void write_edge_list(const Graph& g, std::ostream& out);

// R x C lattice with row-major vertex IDs r*C + c.
Graph gen_grid(std::uint64_t rows, std::uint64_t cols);

Graph gen_clique(std::uint64_t k);

// G(n, p) with a fixed mt19937_64 stream; identical seeds give identical graphs.
Graph gen_erdos_renyi(std::uint64_t n, double p, std::uint64_t seed);

// Same graph with every neighbor list shuffled by a seeded generator.
Graph permute_adjacency(const Graph& g, std::uint64_t seed);

// (1/m) * sum over undirected edges of min(d(u), d(v)). Throws kUndefined
// when the graph has no edges.
double avg_degeneracy(const Graph& g);

}  // namespace fourcycle

#endif  // FOURCYCLE_GRAPH_H_
