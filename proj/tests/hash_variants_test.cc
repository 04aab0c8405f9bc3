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

#include <gtest/gtest.h>

#include "fourcycle/edge_index.h"
#include "test_graphs.h"

namespace fourcycle {
namespace {

using testing::cycle4;
using testing::k4;

TEST(EdgeKey, CanonicalAndPacked) {
  EXPECT_EQ(edge_key(3, 9), edge_key(9, 3));
  EXPECT_EQ(edge_key(3, 9), (std::uint64_t{3} << 32) | 9);
}

TEST(CountGlobalHash, Examples) {
  EXPECT_EQ(count_global_hash(k4()), 3u);
  EXPECT_EQ(count_global_hash(gen_grid(10, 10)), 81u);
  EXPECT_EQ(count_global_hash(gen_erdos_renyi(50, 0.2, 50)),
            count_global(gen_erdos_renyi(50, 0.2, 50)));
}

TEST(CountPerVertexHash, Examples) {
  EXPECT_EQ(count_per_vertex_hash(cycle4()), (std::vector<std::uint64_t>{1, 1, 1, 1}));
  EXPECT_EQ(count_per_vertex_hash(k4()), (std::vector<std::uint64_t>{3, 3, 3, 3}));
  const Graph g = gen_erdos_renyi(40, 0.25, 40);
  EXPECT_EQ(count_per_vertex_hash(g), count_per_vertex(g));
}

TEST(CountPerEdgeHash, Examples) {
  const EdgeKeyMap c4 = count_per_edge_hash(cycle4());
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 3}}) {
    EXPECT_EQ(c4.at(edge_key(u, v)), 1u);
  }
  EXPECT_EQ(to_edge_counts(k4(), count_per_edge_hash(k4())).counts,
            std::vector<std::uint64_t>(6, 2));
  const Graph grid = gen_grid(3, 3);
  const EdgeKeyMap by_key = count_per_edge_hash(grid);
  EXPECT_EQ(by_key.at(edge_key(4, 1)), 2u);
  EXPECT_EQ(by_key.at(edge_key(4, 7)), 2u);
  EXPECT_EQ(by_key.at(edge_key(0, 1)), 1u);
  EXPECT_EQ(by_key.at(edge_key(7, 8)), 1u);
}

TEST(HashVariants, AgreeWithArraysAcrossManyGraphs) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = permute_adjacency(
        gen_erdos_renyi(45, 0.05 + 0.02 * static_cast<double>(seed), seed), seed);
    EXPECT_EQ(count_global_hash(g), count_global(g));
    EXPECT_EQ(count_per_vertex_hash(g), count_per_vertex(g));
    EXPECT_EQ(to_edge_counts(g, count_per_edge_hash(g)), count_per_edge(g));
  }
}

}  // namespace
}  // namespace fourcycle
