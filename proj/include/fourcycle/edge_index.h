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

#ifndef FOURCYCLE_EDGE_INDEX_H_
#define FOURCYCLE_EDGE_INDEX_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fourcycle/graph.h"

namespace fourcycle {

/**
 * Numbers the undirected edges 0..m-1. Edge {u, v} gets the rank of the
 * half-edge min(u,v) -> max(u,v) among all "upward" half-edges (target ID
 * greater than source ID) in CSR scan order.
 *
 * Holds one prefix array of n+1 upward-degree sums.
 */
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g);

  std::size_t size() const { return upward_offsets_.back(); }

  // Number of upward half-edges stored by vertices with smaller ID.
  std::uint64_t upward_offset(Vertex v) const { return upward_offsets_[v]; }

  // O(d(min(u,v))). Throws kInvalidArgument if {u, v} is not an edge.
  std::size_t index_of(Vertex u, Vertex v) const;

  // Endpoints (lo, hi) of edge `k`, lo < hi.
  Edge endpoints(std::size_t k) const;

  // Calls fn(k, lo, hi) for every edge in index order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    std::size_t k = 0;
    for (Vertex v = 0; v < graph_->num_vertices(); ++v) {
      for (Vertex u : graph_->neighbors(v)) {
        if (v < u) fn(k++, v, u);
      }
    }
  }

 private:
  const Graph* graph_;
  std::vector<std::uint64_t> upward_offsets_;
};

}  // namespace fourcycle

#endif  // FOURCYCLE_EDGE_INDEX_H_
