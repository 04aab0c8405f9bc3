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

// Small named graphs shared by the unit tests.

#ifndef FOURCYCLE_TESTS_TEST_GRAPHS_H_
#define FOURCYCLE_TESTS_TEST_GRAPHS_H_

#include <sstream>
#include <string>
#include <vector>

#include "fourcycle/graph.h"

namespace fourcycle::testing {

inline Graph from_text(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in).graph;
}

// Fig. 1 shape relabeled 0-based: 0-1-2-3-0.
inline Graph cycle4() { return from_text("0 1\n1 2\n2 3\n3 0\n"); }
inline Graph triangle() { return gen_clique(3); }
inline Graph k4() { return gen_clique(4); }
inline Graph path4() { return from_text("0 1\n1 2\n2 3\n"); }
inline Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return Graph::from_edges(leaves + 1, edges);
}

}  // namespace fourcycle::testing

#endif  // FOURCYCLE_TESTS_TEST_GRAPHS_H_
