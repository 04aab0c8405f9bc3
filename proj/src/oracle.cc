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

#include "fourcycle/oracle.h"

#include <string>

#include "fourcycle/errors.h"

namespace fourcycle {
namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::kCapExceeded, "oracle refuses graph with " + std::to_string(n) +
                                             " vertices (cap " + std::to_string(cap) + ")");
  }
}

}  // namespace

DenseAdjacency::DenseAdjacency(const Graph& g, std::size_t cap)
    : n_(g.num_vertices()), bits_(n_ * n_, false) {
  check_cap(n_, cap);
  for (std::size_t a = 0; a < n_; ++a) {
    for (Vertex b : g.neighbors(static_cast<Vertex>(a))) bits_[a * n_ + b] = true;
  }
}

std::uint64_t oracle_global_codegree(const Graph& g, std::size_t cap) {
  check_cap(g.num_vertices(), cap);
  const DenseAdjacency adj(g, cap);
  const std::size_t n = adj.size();
  std::uint64_t doubled = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      std::uint64_t common = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (adj.adjacent(a, w) && adj.adjacent(b, w)) ++common;
      }
      if (common >= 2) doubled += common * (common - 1) / 2;
    }
  }
  return doubled / 2;
}

OracleCounts oracle_local_quadruples(const Graph& g, std::size_t cap) {
  check_cap(g.num_vertices(), cap);
  const DenseAdjacency adj(g, cap);
  const std::size_t n = adj.size();

  std::uint64_t walks = 0;
  std::vector<std::uint64_t> vertex_walks(n, 0);
  std::vector<std::uint64_t> pair_walks(n * n, 0);
  // Keeps pair_walks symmetric.
  auto hit_edge = [&](std::size_t p, std::size_t q) {
    ++pair_walks[p * n + q];
    ++pair_walks[q * n + p];
  };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!adj.adjacent(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || !adj.adjacent(b, c)) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (d == a || d == b || !adj.adjacent(c, d) || !adj.adjacent(d, a)) continue;
          ++walks;
          ++vertex_walks[a];
          ++vertex_walks[b];
          ++vertex_walks[c];
          ++vertex_walks[d];
          hit_edge(a, b);
          hit_edge(b, c);
          hit_edge(c, d);
          hit_edge(d, a);
        }
      }
    }
  }

  OracleCounts out;
  out.n = n;
  out.global = walks / 8;
  out.per_vertex.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.per_vertex[v] = vertex_walks[v] / 8;
  out.per_pair.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i) out.per_pair[i] = pair_walks[i] / 8;
  return out;
}

}  // namespace fourcycle
