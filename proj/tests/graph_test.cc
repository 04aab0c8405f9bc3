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
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fourcycle/errors.h"
#include "test_graphs.h"

namespace fourcycle {
namespace {

using testing::cycle4;
using testing::from_text;
using testing::star;

LoadResult load(const std::string& text, LoadOptions options = {}) {
  std::istringstream in(text);
  return load_edge_list(in, options);
}

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kIo;
}

std::vector<std::vector<Vertex>> sorted_lists(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto n = g.neighbors(v);
    out.emplace_back(n.begin(), n.end());
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

TEST(LoadEdgeList, CycleOfFour) {
  const LoadResult r = load("0 1\n1 2\n2 3\n3 0");
  EXPECT_EQ(r.graph.num_vertices(), 4u);
  EXPECT_EQ(r.graph.num_half_edges(), 8u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(r.graph.degree(v), 2u);
  EXPECT_EQ(r.report.edges_kept, 4u);
  EXPECT_EQ(r.report.vertices_seen, 4u);
}

TEST(LoadEdgeList, DropsDuplicatesAndSelfLoops) {
  const LoadResult r = load("0 1\n1 0\n0 0");
  EXPECT_EQ(r.graph.num_vertices(), 2u);
  EXPECT_EQ(r.graph.num_edges(), 1u);
  EXPECT_EQ(r.report.duplicates_dropped, 1u);
  EXPECT_EQ(r.report.self_loops_dropped, 1u);
  EXPECT_EQ(r.report.edges_kept, 1u);
}

TEST(LoadEdgeList, RemapDensifiesInFirstAppearanceOrder) {
  const LoadResult r = load("5 9\n9 7", {.strict = false, .remap_ids = true});
  EXPECT_TRUE(r.report.remapped);
  ASSERT_EQ(r.graph.num_vertices(), 3u);
  EXPECT_EQ(sorted_lists(r.graph), (std::vector<std::vector<Vertex>>{{1}, {0, 2}, {1}}));
}

TEST(LoadEdgeList, GapsBecomeIsolatedVertices) {
  const LoadResult r = load("# header\n\n0 5\n");
  EXPECT_EQ(r.graph.num_vertices(), 6u);
  EXPECT_EQ(r.report.vertices_seen, 2u);
  EXPECT_EQ(r.graph.degree(3), 0u);
}

TEST(LoadEdgeList, CommentsTabsAndCarriageReturns) {
  const LoadResult r = load("# c\r\n  1\t2 \r\n2 3 # trailing\n");
  EXPECT_EQ(r.graph.num_edges(), 2u);
}

TEST(LoadEdgeList, EmptyInput) {
  const LoadResult r = load("");
  EXPECT_EQ(r.graph.num_vertices(), 0u);
  EXPECT_EQ(r.graph.num_edges(), 0u);
}

TEST(LoadEdgeList, MalformedTokenReportsLine) {
  try {
    load("0 1\n1 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(error_of([] { load("-1 2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(error_of([] { load("1\n"); }), ErrorCode::kParse);
  EXPECT_EQ(error_of([] { load("1 2 3\n"); }), ErrorCode::kParse);
}

TEST(LoadEdgeList, StrictRejects) {
  const LoadOptions strict{.strict = true, .remap_ids = false};
  EXPECT_EQ(error_of([&] { load("0 1\n1 0\n", strict); }), ErrorCode::kRejected);
  EXPECT_EQ(error_of([&] { load("0 0\n", strict); }), ErrorCode::kRejected);
  EXPECT_EQ(load("0 1\n1 2\n", strict).graph.num_edges(), 2u);
}

TEST(LoadEdgeList, IdOverflow) {
  EXPECT_EQ(error_of([] { load("0 99999999999999999999999\n"); }), ErrorCode::kOverflow);
  EXPECT_EQ(error_of([] { load("0 4294967295\n"); }), ErrorCode::kOverflow);
  // Remapping makes large IDs fine.
  EXPECT_EQ(load("0 18446744073709551615\n", {.strict = false, .remap_ids = true})
                .graph.num_vertices(),
            2u);
}

TEST(LoadEdgeList, RoundTripThroughText) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Graph g = permute_adjacency(gen_erdos_renyi(30, 0.2, seed), seed);
    std::ostringstream text;
    write_edge_list(g, text);
    // Isolated trailing vertices are not representable in an edge list.
    const Graph back = load(text.str()).graph;
    auto a = sorted_lists(g);
    auto b = sorted_lists(back);
    a.resize(b.size());
    EXPECT_EQ(a, b);
  }
}

TEST(GraphCsr, OffsetsMatchDegrees) {
  const Graph g = gen_erdos_renyi(40, 0.3, 11);
  std::uint64_t total = 0;
  EXPECT_EQ(g.offsets().front(), 0u);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    EXPECT_EQ(g.offsets()[v + 1] - g.offsets()[v], g.degree(v));
    total += g.degree(v);
  }
  EXPECT_EQ(total, 2 * g.num_edges());
  EXPECT_EQ(g.offsets().back(), g.num_half_edges());
}

TEST(GraphCsr, FromCsrRejectsBrokenInvariants) {
  EXPECT_EQ(error_of([] { Graph::from_csr({0, 1, 1}, {1}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_of([] { Graph::from_csr({0, 1, 2}, {0, 0}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_of([] { Graph::from_csr({0, 2, 4}, {1, 1, 0, 0}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_of([] { Graph::from_csr({0, 1, 2}, {5, 0}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_of([] { Graph::from_csr({1, 2}, {0}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(Graph::from_csr({0, 1, 2}, {1, 0}).num_edges(), 1u);
}

// Brute-force count over all 4-subsets, for the grid closed form.
std::uint64_t brute_force_c4(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) adj[v][u] = true;
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          // The three ways to arrange 4 vertices on a cycle.
          count += adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a];
          count += adj[a][b] && adj[b][d] && adj[d][c] && adj[c][a];
          count += adj[a][c] && adj[c][b] && adj[b][d] && adj[d][a];
        }
  return count;
}

TEST(GenGrid, SmallShapes) {
  const Graph g = gen_grid(3, 3);
  EXPECT_EQ(g.num_vertices(), 9u);
  EXPECT_EQ(g.num_edges(), 12u);
  EXPECT_EQ(brute_force_c4(g), 4u);
  const Graph one = gen_grid(1, 1);
  EXPECT_EQ(one.num_vertices(), 1u);
  EXPECT_EQ(one.num_edges(), 0u);
}

TEST(GenGrid, BruteForceMatchesClosedFormUpTo12) {
  for (std::uint64_t r = 1; r <= 12; ++r) {
    for (std::uint64_t c = 1; c <= 12; c += (r > 6 ? 3 : 1)) {
      const Graph g = gen_grid(r, c);
      EXPECT_EQ(g.num_edges(), (r - 1) * c + r * (c - 1));
      EXPECT_EQ(brute_force_c4(g), (r - 1) * (c - 1)) << r << "x" << c;
    }
  }
}

TEST(GenGrid, RowMajorNeighborsAreSortedAndValid) {
  const Graph g = gen_grid(4, 5);
  // Re-validating through from_csr checks symmetry and simplicity.
  Graph::from_csr({g.offsets().begin(), g.offsets().end()},
                  {g.adjacency().begin(), g.adjacency().end()});
  EXPECT_EQ(sorted_lists(g)[6], (std::vector<Vertex>{1, 5, 7, 11}));
}

TEST(GenGrid, RejectsBadDimensions) {
  EXPECT_EQ(error_of([] { gen_grid(0, 3); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(error_of([] { gen_grid(1ull << 33, 1ull << 33); }), ErrorCode::kOverflow);
}

TEST(AvgDegeneracy, Examples) {
  EXPECT_DOUBLE_EQ(avg_degeneracy(cycle4()), 2.0);
  EXPECT_DOUBLE_EQ(avg_degeneracy(star(5)), 1.0);
  // 3x3 grid: 8 boundary edges of min degree 2 (corner-edge pairs) and
  // 4 spokes of min degree 3: (8*2 + 4*3) / 12.
  EXPECT_DOUBLE_EQ(avg_degeneracy(gen_grid(3, 3)), 28.0 / 12.0);
  EXPECT_EQ(error_of([] { avg_degeneracy(gen_grid(1, 1)); }), ErrorCode::kUndefined);
}

TEST(AvgDegeneracy, BoundedByOneAndMaxDegree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen_erdos_renyi(25, 0.05 + 0.03 * static_cast<double>(seed), seed);
    if (g.num_edges() == 0) continue;
    const double d = avg_degeneracy(g);
    EXPECT_GE(d, 1.0);
    EXPECT_LE(d, static_cast<double>(g.max_degree()));
  }
}

TEST(DegreeOrder, Examples) {
  const Graph s = star(3);  // d(0)=3, d(1)=1
  const DegreeOrder order(s);
  EXPECT_TRUE(order.precedes(1, 0));
  EXPECT_FALSE(order.precedes(0, 1));

  const Graph g = from_text("0 1\n1 2\n2 0\n7 5\n5 6\n6 7\n");
  const DegreeOrder tie(g);
  EXPECT_TRUE(tie.precedes(0, 7));
  EXPECT_FALSE(tie.precedes(7, 0));
  EXPECT_FALSE(tie.precedes(3, 3));
  EXPECT_EQ(error_of([&] { tie.precedes(0, 99); }), ErrorCode::kInvalidArgument);
}

TEST(DegreeOrder, StrictTotalOrderOnRandomTriples) {
  const Graph g = gen_erdos_renyi(60, 0.1, 5);
  const DegreeOrder order(g);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 5000; ++i) {
    const Vertex a = rng() % 60, b = rng() % 60, c = rng() % 60;
    const int relations = int(order.precedes(a, b)) + int(order.precedes(b, a)) + int(a == b);
    EXPECT_EQ(relations, 1);
    if (order.precedes(a, b) && order.precedes(b, c)) EXPECT_TRUE(order.precedes(a, c));
    if (order.precedes(a, b)) EXPECT_LE(g.degree(a), g.degree(b));
  }
}

void expect_sorted_layout(const Graph& g, const SortedGraph& sg) {
  const DegreeOrder order(g);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : sg.lower(v)) EXPECT_TRUE(order.precedes(u, v));
    for (Vertex u : sg.upper(v)) EXPECT_TRUE(order.precedes(v, u));
    auto up = sg.upper(v);
    EXPECT_TRUE(std::is_sorted(up.begin(), up.end(),
                               [&](Vertex a, Vertex b) { return order.precedes(a, b); }));
    auto before = g.neighbors(v);
    auto after = sg.graph().neighbors(v);
    std::vector<Vertex> x(before.begin(), before.end()), y(after.begin(), after.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    EXPECT_EQ(x, y);
  }
}

TEST(PreprocessSort, CycleUpperListsAreLargerIds) {
  const SortedGraph sg = preprocess_sort(cycle4());
  EXPECT_EQ(std::vector<Vertex>(sg.upper(0).begin(), sg.upper(0).end()),
            (std::vector<Vertex>{1, 3}));
  EXPECT_EQ(std::vector<Vertex>(sg.upper(1).begin(), sg.upper(1).end()),
            (std::vector<Vertex>{2}));
  EXPECT_TRUE(sg.upper(3).empty());
}

TEST(PreprocessSort, GridAndRandomLayouts) {
  const Graph grid = gen_grid(3, 3);
  const SortedGraph sg = preprocess_sort(grid);
  expect_sorted_layout(grid, sg);
  // The center (degree 4) is preceded by all four neighbors.
  EXPECT_EQ(sg.lower(4).size(), 4u);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = permute_adjacency(gen_erdos_renyi(40, 0.15, seed), seed + 100);
    expect_sorted_layout(g, preprocess_sort(g));
  }
}

TEST(PreprocessSort, LowerPrefixKeepsInputOrder) {
  const Graph g = Graph::from_csr({0, 3, 4, 5, 6}, {3, 1, 2, 0, 0, 0});
  // Vertex 0 has degree 3; all its neighbors precede it, in input order.
  const SortedGraph sg = preprocess_sort(g);
  EXPECT_EQ(std::vector<Vertex>(sg.lower(0).begin(), sg.lower(0).end()),
            (std::vector<Vertex>{3, 1, 2}));
}

}  // namespace
}  // namespace fourcycle
