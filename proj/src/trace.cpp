// trace.cpp

// Copyright 2026  The seqbatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "seqbatch/trace.hpp"

#include <algorithm>

namespace seqbatch {

std::vector<Length> length_series(const EpochPlan& plan, const Corpus& corpus) {
  std::vector<Length> out;
  out.reserve(plan.utterance_count());
  for (const Batch& b : plan.batches)
    for (std::size_t i : b.members()) out.push_back(corpus.length(i));
  return out;
}

std::size_t count_monotone_runs(std::span<const Length> series) {
  if (series.empty()) return 0;
  std::size_t runs = 1;
  int direction = 0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    const int step = (series[i] > series[i - 1]) - (series[i] < series[i - 1]);
    if (step == 0) continue;
    if (direction != 0 && step != direction) ++runs;
    direction = step;
  }
  return runs;
}

std::size_t longest_monotone_run(std::span<const Length> series) {
  if (series.empty()) return 0;
  std::size_t best = 1;
  std::size_t up = 1;
  std::size_t down = 1;
  for (std::size_t i = 1; i < series.size(); ++i) {
    up = series[i] >= series[i - 1] ? up + 1 : 1;
    down = series[i] <= series[i - 1] ? down + 1 : 1;
    best = std::max({best, up, down});
  }
  return best;
}

bool is_non_decreasing(std::span<const Length> series) {
  return std::is_sorted(series.begin(), series.end());
}

}  // namespace seqbatch
