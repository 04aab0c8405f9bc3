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

#include <gtest/gtest.h>

#include "fourcycle/errors.h"

namespace fourcycle {
namespace {

TEST(Median, OddAndEven) {
  EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2);
  EXPECT_DOUBLE_EQ(median({4, 1, 2, 3}), 2.5);
}

TEST(RunBench, GridRecordsAgree) {
  const BenchRun run = run_bench(gen_grid(100, 100), "grid-100x100", {});
  ASSERT_EQ(run.records.size(), 6u);
  EXPECT_TRUE(run.results_agree);
  for (const BenchRecord& r : run.records) {
    EXPECT_EQ(r.result, 9801u);
    EXPECT_GT(r.seconds, 0);
    EXPECT_EQ(r.repetitions, 3);
    EXPECT_EQ(r.warmups, 1);
    EXPECT_EQ(r.n, 10000u);
  }
  EXPECT_EQ(run.ratios.size(), 3u);
}

TEST(RunBench, EmptyGraphStillTimed) {
  BenchOptions options;
  options.quantities = {Quantity::kGlobal};
  const BenchRun run = run_bench(Graph::from_edges(10, {}), "empty", options);
  ASSERT_EQ(run.records.size(), 2u);
  for (const BenchRecord& r : run.records) {
    EXPECT_EQ(r.result, 0u);
    EXPECT_GT(r.seconds, 0);
  }
}

TEST(RunBench, RejectsZeroRepetitions) {
  BenchOptions options;
  options.repetitions = 0;
  EXPECT_THROW(run_bench(gen_grid(2, 2), "g", options), Error);
}

}  // namespace
}  // namespace fourcycle
