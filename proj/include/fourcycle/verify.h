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

#ifndef FOURCYCLE_VERIFY_H_
#define FOURCYCLE_VERIFY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fourcycle/count.h"
#include "fourcycle/graph.h"

namespace fourcycle {

// sum_v count(v) == 4 * global.
bool vertex_sum_identity(std::span<const std::uint64_t> per_vertex, std::uint64_t global);

// sum_e count(e) == 4 * global.
bool edge_sum_identity(const EdgeCounts& per_edge, std::uint64_t global);

// For every v: sum over u in N(v) of count(vu) == 2 * count(v).
bool vertex_edge_identity(const Graph& g, std::span<const std::uint64_t> per_vertex,
                          const EdgeCounts& per_edge);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::uint64_t global = 0;

  bool ok() const;
  // nullptr when every check passed.
  const CheckResult* first_failure() const;
};

/**
 * Runs every fast variant and both oracles on `g` and checks that they
 * agree, that the local-count identities hold, that enumeration emits each
 * cycle once with a valid witness, and that scratch is left zeroed.
 * Throws kCapExceeded above kQuadrupleCap vertices.
 */
VerifyReport verify_graph(const Graph& g);

}  // namespace fourcycle

#endif  // FOURCYCLE_VERIFY_H_
