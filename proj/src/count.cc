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

#include "fourcycle/count.h"

#include <algorithm>

#include "fourcycle/edge_index.h"

namespace fourcycle {
namespace {

// Runs a counting pass; if it throws, the workspace scratch is dropped so a
// half-finished pass never leaks nonzero counters into the next call.
template <typename Pass>
auto run_pass(Workspace& ws, Pass&& pass) {
  try {
    return pass();
  } catch (...) {
    ws.discard();
    throw;
  }
}

}  // namespace

bool Scratch::all_zero() const {
  return std::all_of(counters_.begin(), counters_.end(), [](std::uint64_t c) { return c == 0; });
}

bool DualScratch::all_zero() const {
  return std::all_of(counters_.begin(), counters_.end(),
                     [](const DualCounter& c) { return c.orig == 0; });
}

Scratch& Workspace::scratch(std::size_t n) {
  if (!scratch_ || scratch_->size() != n) {
    scratch_.emplace(n);
    ++footprint_.counter_arrays;
    footprint_.counter_elements += n;
  }
  return *scratch_;
}

DualScratch& Workspace::dual_scratch(std::size_t n) {
  if (!dual_ || dual_->size() != n) {
    dual_.emplace(n);
    ++footprint_.pair_arrays;
    footprint_.pair_elements += n;
  }
  return *dual_;
}

std::vector<std::uint64_t>& Workspace::half_edge_counters(std::size_t half_edges) {
  if (!half_edge_allocated_ || half_edge_.size() != half_edges) {
    half_edge_.assign(half_edges, 0);
    half_edge_.shrink_to_fit();
    half_edge_allocated_ = true;
    ++footprint_.half_edge_arrays;
    footprint_.half_edge_elements += half_edges;
  } else {
    std::fill(half_edge_.begin(), half_edge_.end(), 0);
  }
  return half_edge_;
}

void Workspace::discard() {
  scratch_.reset();
  dual_.reset();
  half_edge_.clear();
  half_edge_allocated_ = false;
}

std::uint64_t count_global(const Graph& g, Workspace& ws) {
  const std::size_t n = g.num_vertices();
  std::uint64_t* const counters = ws.scratch(n).data();
  return run_pass(ws, [&] {
    const DegreeOrder order(g);
    std::uint64_t total = 0;
    for (Vertex v = 0; v < n; ++v) {
      const std::uint64_t rank_v = order.rank(v);
      const auto nbrs = g.neighbors(v);
      for (Vertex u : nbrs) {
        if (order.rank(u) >= rank_v) continue;
        for (Vertex y : g.neighbors(u)) {
          if (order.rank(y) < rank_v) {
            checked_add(total, counters[y]);
            ++counters[y];
          }
        }
      }
      for (Vertex u : nbrs) {
        if (order.rank(u) >= rank_v) continue;
        for (Vertex y : g.neighbors(u)) counters[y] = 0;
      }
    }
    return total;
  });
}

std::uint64_t count_global(const Graph& g) {
  Workspace ws;
  return count_global(g, ws);
}

std::uint64_t count_global_sorted(const SortedGraph& sg, Workspace& ws) {
  const Graph& g = sg.graph();
  const std::size_t n = g.num_vertices();
  std::uint64_t* const counters = ws.scratch(n).data();
  return run_pass(ws, [&] {
    std::uint64_t total = 0;
    for (Vertex v = 0; v < n; ++v) {
      // v sits in N+(u) for every u in N-(v), so each scan stops at v.
      for (Vertex u : sg.lower(v)) {
        for (const Vertex* y = g.neighbors(u).data(); *y != v; ++y) {
          checked_add(total, counters[*y]);
          ++counters[*y];
        }
      }
      for (Vertex u : sg.lower(v)) {
        for (const Vertex* y = g.neighbors(u).data(); *y != v; ++y) counters[*y] = 0;
      }
    }
    return total;
  });
}

std::uint64_t count_global_sorted(const SortedGraph& g) {
  Workspace ws;
  return count_global_sorted(g, ws);
}

std::vector<std::uint64_t> count_per_vertex(const Graph& g, Workspace& ws) {
  const std::size_t n = g.num_vertices();
  DualCounter* const counters = ws.dual_scratch(n).data();
  return run_pass(ws, [&] {
    const DegreeOrder order(g);
    std::vector<std::uint64_t> local(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      const std::uint64_t rank_v = order.rank(v);
      const auto nbrs = g.neighbors(v);
      for (Vertex u : nbrs) {
        if (order.rank(u) >= rank_v) continue;
        for (Vertex y : g.neighbors(u)) {
          if (order.rank(y) >= rank_v) continue;
          DualCounter& c = counters[y];
          // v is the top vertex; y is antipodal to it.
          checked_add(local[v], c.orig);
          checked_add(local[y], c.orig);
          c.copy = c.orig;
          ++c.orig;
        }
      }
      // copy now holds |S(v,y)| - 1, the cycles through u for this (v, y).
      for (Vertex u : nbrs) {
        if (order.rank(u) >= rank_v) continue;
        for (Vertex y : g.neighbors(u)) {
          if (order.rank(y) >= rank_v) continue;
          checked_add(local[u], counters[y].copy);
          counters[y].orig = 0;
        }
      }
    }
    return local;
  });
}

std::vector<std::uint64_t> count_per_vertex(const Graph& g) {
  Workspace ws;
  return count_per_vertex(g, ws);
}

EdgeCounts count_per_edge(const Graph& g, Workspace& ws) {
  const std::size_t n = g.num_vertices();
  DualCounter* const counters = ws.dual_scratch(n).data();
  std::uint64_t* const directed = ws.half_edge_counters(g.num_half_edges()).data();
  return run_pass(ws, [&] {
    const DegreeOrder order(g);
    const EdgeOffset* const offsets = g.offsets().data();
    const Vertex* const adjacency = g.adjacency().data();

    for (Vertex v = 0; v < n; ++v) {
      const std::uint64_t rank_v = order.rank(v);
      for (EdgeOffset i = offsets[v]; i < offsets[v + 1]; ++i) {
        const Vertex u = adjacency[i];
        if (order.rank(u) >= rank_v) continue;
        for (EdgeOffset j = offsets[u]; j < offsets[u + 1]; ++j) {
          const Vertex y = adjacency[j];
          if (order.rank(y) >= rank_v) continue;
          counters[y].copy = counters[y].orig;
          ++counters[y].orig;
        }
      }
      for (EdgeOffset i = offsets[v]; i < offsets[v + 1]; ++i) {
        const Vertex u = adjacency[i];
        if (order.rank(u) >= rank_v) continue;
        for (EdgeOffset j = offsets[u]; j < offsets[u + 1]; ++j) {
          const Vertex y = adjacency[j];
          if (order.rank(y) >= rank_v) continue;
          checked_add(directed[i], counters[y].copy);
          checked_add(directed[j], counters[y].copy);
          counters[y].orig = 0;
        }
      }
    }

    // Merge the two directional accumulators of each edge. The reverse
    // half-edge is found by scanning the list of the lower-ranked endpoint;
    // the same scan yields its upward rank for the edge index.
    const EdgeIndex index(g);
    ws.record_index(n + 1);
    EdgeCounts result;
    result.counts.assign(index.size(), 0);
    for (Vertex v = 0; v < n; ++v) {
      const std::uint64_t rank_v = order.rank(v);
      std::uint64_t upward_seen = 0;
      for (EdgeOffset i = offsets[v]; i < offsets[v + 1]; ++i) {
        const Vertex u = adjacency[i];
        const std::uint64_t own_key = index.upward_offset(v) + upward_seen;
        if (u > v) ++upward_seen;
        if (order.rank(u) >= rank_v) continue;
        EdgeOffset j = offsets[u];
        std::uint64_t upward_before_j = 0;
        for (; adjacency[j] != v; ++j) {
          if (adjacency[j] > u) ++upward_before_j;
        }
        const std::uint64_t key = v < u ? own_key : index.upward_offset(u) + upward_before_j;
        std::uint64_t sum = directed[i];
        checked_add(sum, directed[j]);
        result.counts[key] = sum;
      }
    }
    return result;
  });
}

EdgeCounts count_per_edge(const Graph& g) {
  Workspace ws;
  return count_per_edge(g, ws);
}

std::array<Vertex, 4> canonical_form(const CycleTuple& t) {
  std::array<Vertex, 2> a{std::min(t.v, t.y), std::max(t.v, t.y)};
  std::array<Vertex, 2> b{std::min(t.u, t.x), std::max(t.u, t.x)};
  if (b < a) std::swap(a, b);
  return {a[0], a[1], b[0], b[1]};
}

namespace detail {

void WedgeLists::append(Vertex y, Vertex value) {
  if (pool_.size() >= kNil) throw_counter_overflow();
  const auto node = static_cast<std::uint32_t>(pool_.size());
  pool_.push_back({value, kNil});
  if (head_[y] == kNil) {
    head_[y] = node;
  } else {
    pool_[tail_[y]].next = node;
  }
  tail_[y] = node;
}

}  // namespace detail
}  // namespace fourcycle
