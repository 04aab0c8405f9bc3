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

#ifndef FOURCYCLE_BENCH_H_
#define FOURCYCLE_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourcycle/graph.h"

namespace fourcycle {

enum class Quantity { kGlobal, kVertex, kEdge };
enum class Variant { kArray, kMap };

std::string_view quantity_name(Quantity q);
std::string_view variant_name(Variant v);

struct BenchOptions {
  int repetitions = 3;
  int warmups = 1;
  std::vector<Quantity> quantities{Quantity::kGlobal, Quantity::kVertex, Quantity::kEdge};
  std::vector<Variant> variants{Variant::kArray, Variant::kMap};
};

struct BenchRecord {
  std::string algorithm;
  std::string variant;
  std::string graph;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double seconds = 0;  // median over repetitions
  int repetitions = 0;
  int warmups = 0;
  // Global count implied by the output (for local counts, a quarter of the
  // sum), so records of different variants are directly comparable.
  std::uint64_t result = 0;
};

struct BenchRatio {
  Quantity quantity;
  double map_over_array;
};

struct BenchRun {
  std::vector<BenchRecord> records;
  std::vector<BenchRatio> ratios;  // only where both variants ran
  bool results_agree = true;
};

// Times each requested (quantity, variant) pair on `g`: `warmups` untimed
// runs, then `repetitions` timed runs, median reported. Scratch allocation
// is excluded from timing.
BenchRun run_bench(const Graph& g, const std::string& label, const BenchOptions& options);

double median(std::vector<double> samples);

}  // namespace fourcycle

#endif  // FOURCYCLE_BENCH_H_
