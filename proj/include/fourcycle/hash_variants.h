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

// Associative-map counterparts of the array passes. They exist as a
// correctness cross-check and as the baseline for the array-vs-map
// benchmark, so they deliberately use the standard library's default map.

#ifndef FOURCYCLE_HASH_VARIANTS_H_
#define FOURCYCLE_HASH_VARIANTS_H_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fourcycle/count.h"
#include "fourcycle/graph.h"

namespace fourcycle {

// Vertex -> counter. operator[] reads an absent key as zero.
using VertexMap = std::unordered_map<Vertex, std::uint64_t>;

// Packed undirected edge -> counter; see edge_key().
using EdgeKeyMap = std::unordered_map<std::uint64_t, std::uint64_t>;

// Smaller endpoint in the high 32 bits, larger in the low 32 bits, so {u,v}
// and {v,u} produce the same key.
inline std::uint64_t edge_key(Vertex a, Vertex b) {
  const Vertex lo = a < b ? a : b;
  const Vertex hi = a < b ? b : a;
  return (std::uint64_t{lo} << 32) | hi;
}

// Single pass per vertex; the map is recreated for each outer vertex
// instead of being zeroed.
std::uint64_t count_global_hash(const Graph& g);

std::vector<std::uint64_t> count_per_vertex_hash(const Graph& g);

// Keys absent from the result have count zero.
EdgeKeyMap count_per_edge_hash(const Graph& g);

// Re-keys a map result by EdgeIndex.
EdgeCounts to_edge_counts(const Graph& g, const EdgeKeyMap& by_key);

}  // namespace fourcycle

#endif  // FOURCYCLE_HASH_VARIANTS_H_
