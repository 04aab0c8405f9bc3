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

#include "fourcycle/hash_variants.h"

#include "fourcycle/edge_index.h"
#include "fourcycle/errors.h"

namespace fourcycle {

std::uint64_t count_global_hash(const Graph& g) {
  const DegreeOrder order(g);
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    VertexMap wedges;
    const std::uint64_t rank_v = order.rank(v);
    for (Vertex u : g.neighbors(v)) {
      if (order.rank(u) >= rank_v) continue;
      for (Vertex y : g.neighbors(u)) {
        if (order.rank(y) >= rank_v) continue;
        std::uint64_t& c = wedges[y];
        checked_add(total, c);
        ++c;
      }
    }
  }
  return total;
}

std::vector<std::uint64_t> count_per_vertex_hash(const Graph& g) {
  const DegreeOrder order(g);
  std::vector<std::uint64_t> local(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    VertexMap wedges;
    const std::uint64_t rank_v = order.rank(v);
    const auto nbrs = g.neighbors(v);
    for (Vertex u : nbrs) {
      if (order.rank(u) >= rank_v) continue;
      for (Vertex y : g.neighbors(u)) {
        if (order.rank(y) >= rank_v) continue;
        std::uint64_t& c = wedges[y];
        checked_add(local[v], c);
        checked_add(local[y], c);
        ++c;
      }
    }
    for (Vertex u : nbrs) {
      if (order.rank(u) >= rank_v) continue;
      for (Vertex y : g.neighbors(u)) {
        if (order.rank(y) >= rank_v) continue;
        checked_add(local[u], wedges.find(y)->second - 1);
      }
    }
  }
  return local;
}

EdgeKeyMap count_per_edge_hash(const Graph& g) {
  const DegreeOrder order(g);
  // Persistent across outer vertices. The second pass needs the final count
  // for every u sharing a y, so the reset of `orig` happens there while
  // `copy` keeps the value being read.
  std::unordered_map<Vertex, DualCounter> wedges;
  EdgeKeyMap result;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::uint64_t rank_v = order.rank(v);
    const auto nbrs = g.neighbors(v);
    for (Vertex u : nbrs) {
      if (order.rank(u) >= rank_v) continue;
      for (Vertex y : g.neighbors(u)) {
        if (order.rank(y) >= rank_v) continue;
        DualCounter& c = wedges[y];
        c.copy = c.orig;
        ++c.orig;
      }
    }
    for (Vertex u : nbrs) {
      if (order.rank(u) >= rank_v) continue;
      for (Vertex y : g.neighbors(u)) {
        if (order.rank(y) >= rank_v) continue;
        DualCounter& c = wedges.find(y)->second;
        checked_add(result[edge_key(v, u)], c.copy);
        checked_add(result[edge_key(u, y)], c.copy);
        c.orig = 0;
      }
    }
  }
  return result;
}

EdgeCounts to_edge_counts(const Graph& g, const EdgeKeyMap& by_key) {
  const EdgeIndex index(g);
  EdgeCounts out;
  out.counts.assign(index.size(), 0);
  for (const auto& [key, count] : by_key) {
    const auto lo = static_cast<Vertex>(key >> 32);
    const auto hi = static_cast<Vertex>(key & 0xffffffffu);
    out.counts[index.index_of(lo, hi)] = count;
  }
  return out;
}

}  // namespace fourcycle
