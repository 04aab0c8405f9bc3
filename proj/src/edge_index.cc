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

#include "fourcycle/edge_index.h"

#include <algorithm>
#include <string>

#include "fourcycle/errors.h"

namespace fourcycle {

EdgeIndex::EdgeIndex(const Graph& g) : graph_(&g), upward_offsets_(g.num_vertices() + 1, 0) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbors(v);
    upward_offsets_[v + 1] =
        upward_offsets_[v] +
        static_cast<std::uint64_t>(std::count_if(nbrs.begin(), nbrs.end(),
                                                 [v](Vertex u) { return u > v; }));
  }
}

std::size_t EdgeIndex::index_of(Vertex u, Vertex v) const {
  const Vertex lo = std::min(u, v);
  const Vertex hi = std::max(u, v);
  if (hi >= graph_->num_vertices() || lo == hi) {
    throw Error(ErrorCode::kInvalidArgument, "not an edge");
  }
  std::uint64_t k = upward_offsets_[lo];
  for (Vertex w : graph_->neighbors(lo)) {
    if (w == hi) return k;
    if (w > lo) ++k;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
}

Edge EdgeIndex::endpoints(std::size_t k) const {
  if (k >= size()) {
    throw Error(ErrorCode::kInvalidArgument, "edge index out of range");
  }
  // Last vertex whose upward range starts at or before k.
  auto it = std::upper_bound(upward_offsets_.begin(), upward_offsets_.end(), k);
  const Vertex lo = static_cast<Vertex>((it - upward_offsets_.begin()) - 1);
  std::uint64_t rank = upward_offsets_[lo];
  for (Vertex w : graph_->neighbors(lo)) {
    if (w > lo) {
      if (rank == k) return {lo, w};
      ++rank;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "edge index out of range");
}

}  // namespace fourcycle
