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

// Array-based 4-cycle counting: global, per-vertex, per-edge, enumeration,
// and the global count over a degree-sorted graph.
//
// Every pass visits each wedge (v, u, y) with u and y preceding v in the
// degree order and accumulates into a size-n counter array that is returned
// to all-zero before the pass finishes.

#ifndef FOURCYCLE_COUNT_H_
#define FOURCYCLE_COUNT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fourcycle/errors.h"
#include "fourcycle/graph.h"

namespace fourcycle {

// Size-n array of 64-bit counters.
class Scratch {
 public:
  explicit Scratch(std::size_t n) : counters_(n, 0) {}

  std::size_t size() const { return counters_.size(); }
  std::uint64_t* data() { return counters_.data(); }
  std::span<const std::uint64_t> view() const { return counters_; }
  bool all_zero() const;

 private:
  std::vector<std::uint64_t> counters_;
};

// Running count plus the value it held before its last increment. Kept as
// an array of pairs so both fields share a cache line.
struct DualCounter {
  std::uint64_t orig = 0;
  std::uint64_t copy = 0;
};

class DualScratch {
 public:
  explicit DualScratch(std::size_t n) : counters_(n) {}

  std::size_t size() const { return counters_.size(); }
  DualCounter* data() { return counters_.data(); }
  std::span<const DualCounter> view() const { return counters_; }
  // Only `orig` is subject to the reset discipline.
  bool all_zero() const;

 private:
  std::vector<DualCounter> counters_;
};

// Auxiliary allocations made through a Workspace, cumulative since creation
// or the last reset_footprint().
struct Footprint {
  std::size_t counter_arrays = 0;
  std::size_t counter_elements = 0;
  std::size_t pair_arrays = 0;
  std::size_t pair_elements = 0;
  std::size_t half_edge_arrays = 0;
  std::size_t half_edge_elements = 0;
  std::size_t index_elements = 0;

  std::size_t bytes() const {
    return counter_elements * sizeof(std::uint64_t) + pair_elements * sizeof(DualCounter) +
           (half_edge_elements + index_elements) * sizeof(std::uint64_t);
  }
};

/**
 * Owns the scratch buffers used by the counting passes. Buffers are
 * allocated on first use and reused while the requested size is unchanged,
 * so repeated calls on one graph allocate once. Not thread-safe; give each
 * concurrent counting call its own Workspace.
 */
class Workspace {
 public:
  Scratch& scratch(std::size_t n);
  DualScratch& dual_scratch(std::size_t n);
  // Zero-filled on every call.
  std::vector<std::uint64_t>& half_edge_counters(std::size_t half_edges);

  // Buffers from the most recent call, for inspecting the reset discipline.
  const std::optional<Scratch>& last_scratch() const { return scratch_; }
  const std::optional<DualScratch>& last_dual_scratch() const { return dual_; }

  // Records a transient edge-index prefix array built by a pass.
  void record_index(std::size_t elements) { footprint_.index_elements += elements; }

  // Drops every buffer; the next request reallocates.
  void discard();

  const Footprint& footprint() const { return footprint_; }
  void reset_footprint() { footprint_ = {}; }

 private:
  std::optional<Scratch> scratch_;
  std::optional<DualScratch> dual_;
  std::vector<std::uint64_t> half_edge_;
  bool half_edge_allocated_ = false;
  Footprint footprint_;
};

// Per-edge counts keyed by EdgeIndex.
struct EdgeCounts {
  std::vector<std::uint64_t> counts;

  std::size_t size() const { return counts.size(); }
  std::uint64_t operator[](std::size_t k) const { return counts[k]; }
  friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};

std::uint64_t count_global(const Graph& g, Workspace& ws);
std::uint64_t count_global(const Graph& g);

std::uint64_t count_global_sorted(const SortedGraph& g, Workspace& ws);
std::uint64_t count_global_sorted(const SortedGraph& g);

std::vector<std::uint64_t> count_per_vertex(const Graph& g, Workspace& ws);
std::vector<std::uint64_t> count_per_vertex(const Graph& g);

EdgeCounts count_per_edge(const Graph& g, Workspace& ws);
EdgeCounts count_per_edge(const Graph& g);

/**
 * One distinct 4-cycle v-u-y-x-v. v is the degree-order maximum of the four
 * vertices; x is the midpoint recorded earlier than u for the pair (v, y).
 */
struct CycleTuple {
  Vertex v;
  Vertex u;
  Vertex y;
  Vertex x;

  friend bool operator==(const CycleTuple&, const CycleTuple&) = default;
};

// Orientation-free key: antipodal pairs {v,y} and {u,x}, each sorted, the
// two pairs in ascending order.
std::array<Vertex, 4> canonical_form(const CycleTuple& t);

namespace detail {

// Append-at-end lists L(y) of wedge midpoints, backed by one node pool.
class WedgeLists {
 public:
  static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

  explicit WedgeLists(std::size_t n) : head_(n, kNil), tail_(n, kNil) {}

  template <typename Fn>
  void for_each(Vertex y, Fn&& fn) const {
    for (std::uint32_t i = head_[y]; i != kNil; i = pool_[i].next) fn(pool_[i].value);
  }

  void append(Vertex y, Vertex value);
  void clear(Vertex y) { head_[y] = tail_[y] = kNil; }
  void release_nodes() { pool_.clear(); }

 private:
  struct Node {
    Vertex value;
    std::uint32_t next;
  };
  std::vector<std::uint32_t> head_;
  std::vector<std::uint32_t> tail_;
  std::vector<Node> pool_;
};

}  // namespace detail

/**
 * Streams every distinct 4-cycle to `sink` exactly once, as a CycleTuple,
 * and returns the number emitted (equal to count_global). Output order is a
 * deterministic function of the adjacency order. Exceptions thrown by the
 * sink abort the enumeration and propagate.
 */
template <typename Sink>
std::uint64_t enumerate_cycles(const Graph& g, Sink&& sink) {
  const DegreeOrder order(g);
  detail::WedgeLists lists(g.num_vertices());
  std::uint64_t emitted = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::uint64_t rank_v = order.rank(v);
    for (Vertex u : g.neighbors(v)) {
      if (order.rank(u) >= rank_v) continue;
      for (Vertex y : g.neighbors(u)) {
        if (order.rank(y) >= rank_v) continue;
        lists.for_each(y, [&](Vertex x) {
          sink(CycleTuple{v, u, y, x});
          ++emitted;
        });
        lists.append(y, u);
      }
    }
    for (Vertex u : g.neighbors(v)) {
      if (order.rank(u) >= rank_v) continue;
      for (Vertex y : g.neighbors(u)) lists.clear(y);
    }
    lists.release_nodes();
  }
  return emitted;
}

}  // namespace fourcycle

#endif  // FOURCYCLE_COUNT_H_
