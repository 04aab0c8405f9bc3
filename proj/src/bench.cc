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

#include "fourcycle/bench.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "fourcycle/count.h"
#include "fourcycle/errors.h"
#include "fourcycle/hash_variants.h"

namespace fourcycle {
namespace {

std::uint64_t quarter_sum(std::span<const std::uint64_t> values) {
  std::uint64_t sum = 0;
  for (std::uint64_t x : values) checked_add(sum, x);
  return sum / 4;
}

std::function<std::uint64_t()> make_job(const Graph& g, Quantity q, Variant v, Workspace& ws) {
  switch (q) {
    case Quantity::kGlobal:
      if (v == Variant::kArray) return [&] { return count_global(g, ws); };
      return [&] { return count_global_hash(g); };
    case Quantity::kVertex:
      if (v == Variant::kArray) return [&] { return quarter_sum(count_per_vertex(g, ws)); };
      return [&] { return quarter_sum(count_per_vertex_hash(g)); };
    case Quantity::kEdge:
      if (v == Variant::kArray) return [&] { return quarter_sum(count_per_edge(g, ws).counts); };
      return [&] {
        std::uint64_t sum = 0;
        for (const auto& entry : count_per_edge_hash(g)) checked_add(sum, entry.second);
        return sum / 4;
      };
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown quantity");
}

}  // namespace

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kGlobal:
      return "global";
    case Quantity::kVertex:
      return "vertex";
    case Quantity::kEdge:
      return "edge";
  }
  return "?";
}

std::string_view variant_name(Variant v) { return v == Variant::kArray ? "array" : "map-default"; }

double median(std::vector<double> samples) {
  if (samples.empty()) return 0;
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
}

BenchRun run_bench(const Graph& g, const std::string& label, const BenchOptions& options) {
  if (options.repetitions < 1 || options.warmups < 0) {
    throw Error(ErrorCode::kInvalidArgument, "repetitions must be >= 1 and warmups >= 0");
  }
  using Clock = std::chrono::steady_clock;
  BenchRun run;
  for (Quantity q : options.quantities) {
    std::optional<double> array_seconds;
    std::optional<double> map_seconds;
    std::optional<std::uint64_t> first_result;
    for (Variant v : options.variants) {
      Workspace ws;
      if (v == Variant::kArray) {
        if (q == Quantity::kGlobal) {
          ws.scratch(g.num_vertices());
        } else {
          ws.dual_scratch(g.num_vertices());
        }
        if (q == Quantity::kEdge) ws.half_edge_counters(g.num_half_edges());
      }
      auto job = make_job(g, q, v, ws);
      std::uint64_t result = 0;
      for (int i = 0; i < options.warmups; ++i) result = job();
      std::vector<double> samples;
      for (int i = 0; i < options.repetitions; ++i) {
        const auto start = Clock::now();
        result = job();
        const std::chrono::duration<double> elapsed = Clock::now() - start;
        // steady_clock can report 0 for trivially small inputs.
        samples.push_back(std::max(elapsed.count(), 1e-9));
      }

      BenchRecord rec;
      rec.algorithm = std::string(quantity_name(q));
      rec.variant = std::string(variant_name(v));
      rec.graph = label;
      rec.n = g.num_vertices();
      rec.m = g.num_edges();
      rec.seconds = median(samples);
      rec.repetitions = options.repetitions;
      rec.warmups = options.warmups;
      rec.result = result;
      if (first_result && *first_result != result) run.results_agree = false;
      first_result = result;
      (v == Variant::kArray ? array_seconds : map_seconds) = rec.seconds;
      run.records.push_back(std::move(rec));
    }
    if (array_seconds && map_seconds) {
      run.ratios.push_back({q, *map_seconds / *array_seconds});
    }
  }
  return run;
}

}  // namespace fourcycle
