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

#include "fourcycle/verify.h"

#include <algorithm>
#include <array>
#include <set>

#include "fourcycle/edge_index.h"
#include "fourcycle/errors.h"
#include "fourcycle/hash_variants.h"
#include "fourcycle/oracle.h"

namespace fourcycle {
namespace {

// Sums without wrapping; false on overflow.
bool sum_all(std::span<const std::uint64_t> values, std::uint64_t& out) {
  out = 0;
  for (std::uint64_t x : values) {
    if (__builtin_add_overflow(out, x, &out)) return false;
  }
  return true;
}

bool four_times_equals(std::uint64_t sum, std::uint64_t global) {
  std::uint64_t four_global = 0;
  return !__builtin_mul_overflow(global, 4, &four_global) && sum == four_global;
}

std::string mismatch(std::uint64_t got, std::uint64_t want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

}  // namespace

bool vertex_sum_identity(std::span<const std::uint64_t> per_vertex, std::uint64_t global) {
  std::uint64_t sum = 0;
  return sum_all(per_vertex, sum) && four_times_equals(sum, global);
}

bool edge_sum_identity(const EdgeCounts& per_edge, std::uint64_t global) {
  std::uint64_t sum = 0;
  return sum_all(per_edge.counts, sum) && four_times_equals(sum, global);
}

bool vertex_edge_identity(const Graph& g, std::span<const std::uint64_t> per_vertex,
                          const EdgeCounts& per_edge) {
  if (per_vertex.size() != g.num_vertices()) return false;
  const EdgeIndex index(g);
  if (per_edge.size() != index.size()) return false;
  std::vector<std::uint64_t> incident(g.num_vertices(), 0);
  bool ok = true;
  index.for_each([&](std::size_t k, Vertex lo, Vertex hi) {
    ok = ok && !__builtin_add_overflow(incident[lo], per_edge[k], &incident[lo]) &&
         !__builtin_add_overflow(incident[hi], per_edge[k], &incident[hi]);
  });
  if (!ok) return false;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::uint64_t doubled = 0;
    if (__builtin_mul_overflow(per_vertex[v], 2, &doubled) || incident[v] != doubled) {
      return false;
    }
  }
  return true;
}

bool VerifyReport::ok() const { return first_failure() == nullptr; }

const CheckResult* VerifyReport::first_failure() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

VerifyReport verify_graph(const Graph& g) {
  const OracleCounts oracle = oracle_local_quadruples(g);
  const std::uint64_t codegree = oracle_global_codegree(g);

  VerifyReport report;
  report.global = oracle.global;
  auto check = [&](std::string name, bool pass, std::string detail = {}) {
    report.checks.push_back({std::move(name), pass, pass ? std::string() : std::move(detail)});
  };
  auto check_global = [&](std::string name, std::uint64_t got) {
    check(std::move(name), got == oracle.global, mismatch(got, oracle.global));
  };

  Workspace ws;
  const std::uint64_t array_global = count_global(g, ws);
  const bool scratch_clean = ws.last_scratch()->all_zero();
  std::vector<CycleTuple> tuples;
  const std::uint64_t emitted =
      enumerate_cycles(g, [&](const CycleTuple& t) { tuples.push_back(t); });

  check_global("global/codegree-oracle", codegree);
  check_global("global/array", array_global);
  check_global("global/sorted", count_global_sorted(preprocess_sort(g), ws));
  check_global("global/map", count_global_hash(g));
  check_global("global/enumerate", emitted);

  const std::vector<std::uint64_t> vertex_array = count_per_vertex(g, ws);
  const bool dual_clean = ws.last_dual_scratch()->all_zero();
  const std::vector<std::uint64_t> vertex_map = count_per_vertex_hash(g);
  check("vertex/array", vertex_array == oracle.per_vertex, "per-vertex counts differ from oracle");
  check("vertex/map", vertex_map == oracle.per_vertex, "per-vertex counts differ from oracle");

  EdgeCounts edge_oracle;
  const EdgeIndex index(g);
  edge_oracle.counts.resize(index.size());
  index.for_each([&](std::size_t k, Vertex lo, Vertex hi) {
    edge_oracle.counts[k] = oracle.edge(lo, hi);
  });
  const EdgeCounts edge_array = count_per_edge(g, ws);
  const bool edge_clean = ws.last_dual_scratch()->all_zero();
  const EdgeCounts edge_map = to_edge_counts(g, count_per_edge_hash(g));
  check("edge/array", edge_array == edge_oracle, "per-edge counts differ from oracle");
  check("edge/map", edge_map == edge_oracle, "per-edge counts differ from oracle");

  check("identity/vertex-sum", vertex_sum_identity(vertex_array, array_global),
        "sum of per-vertex counts is not 4x the global count");
  check("identity/edge-sum", edge_sum_identity(edge_array, array_global),
        "sum of per-edge counts is not 4x the global count");
  check("identity/vertex-edge", vertex_edge_identity(g, vertex_array, edge_array),
        "incident per-edge counts are not 2x the per-vertex count");

  const DegreeOrder order(g);
  const DenseAdjacency adj(g);
  std::set<std::array<Vertex, 4>> seen;
  bool distinct = true;
  bool valid = true;
  bool top = true;
  for (const CycleTuple& t : tuples) {
    distinct = seen.insert(canonical_form(t)).second && distinct;
    std::array<Vertex, 4> ids{t.v, t.u, t.y, t.x};
    std::sort(ids.begin(), ids.end());
    valid = valid && std::adjacent_find(ids.begin(), ids.end()) == ids.end() &&
            adj.adjacent(t.v, t.u) && adj.adjacent(t.u, t.y) && adj.adjacent(t.y, t.x) &&
            adj.adjacent(t.x, t.v);
    top = top && order.rank(t.u) < order.rank(t.v) && order.rank(t.y) < order.rank(t.v) &&
          order.rank(t.x) < order.rank(t.v);
  }
  check("enumerate/distinct", distinct, "a cycle was emitted more than once");
  check("enumerate/valid", valid, "an emitted tuple is not a 4-cycle");
  check("enumerate/top-vertex", top, "an emitted tuple does not lead with its top vertex");

  check("scratch/reset", scratch_clean && dual_clean && edge_clean,
        "scratch counters were not returned to zero");
  return report;
}

}  // namespace fourcycle
