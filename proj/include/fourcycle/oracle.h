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

// Brute-force 4-cycle counters for small graphs. They read the graph only
// through a dense adjacency matrix and share nothing with the fast passes.

#ifndef FOURCYCLE_ORACLE_H_
#define FOURCYCLE_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fourcycle/graph.h"

namespace fourcycle {

inline constexpr std::size_t kDenseCap = 128;
inline constexpr std::size_t kQuadrupleCap = 64;

class DenseAdjacency {
 public:
  // Throws kCapExceeded if the graph has more than `cap` vertices.
  explicit DenseAdjacency(const Graph& g, std::size_t cap = kDenseCap);

  std::size_t size() const { return n_; }
  bool adjacent(std::size_t a, std::size_t b) const { return bits_[a * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

// Each 4-cycle has two antipodal pairs, and a pair with c common neighbors
// closes C(c, 2) cycles, so the count is half the sum over unordered pairs.
std::uint64_t oracle_global_codegree(const Graph& g, std::size_t cap = kDenseCap);

struct OracleCounts {
  std::uint64_t global = 0;
  std::vector<std::uint64_t> per_vertex;
  // n x n, symmetric; entry (a, b) is the count for edge {a, b}.
  std::vector<std::uint64_t> per_pair;
  std::size_t n = 0;

  std::uint64_t edge(std::size_t a, std::size_t b) const { return per_pair[a * n + b]; }
};

// Walks every closed 4-walk on distinct vertices. Each distinct cycle is
// seen as 8 walks (4 rotations x 2 directions).
OracleCounts oracle_local_quadruples(const Graph& g, std::size_t cap = kQuadrupleCap);

}  // namespace fourcycle

#endif  // FOURCYCLE_ORACLE_H_
