// seqbatch/simulator.hpp

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

// Linear cost model standing in for measured training throughput and memory:
//
//   sim_time            = per_batch_overhead * batches
//                         + per_frame_cost * padded_frames
//   utterances_per_time = utterances / sim_time
//   peak_memory         = memory_per_frame * largest batch's padded_frames
//
// Only orderings between strategies are meaningful, not the magnitudes.

#ifndef SEQBATCH_SIMULATOR_HPP_
#define SEQBATCH_SIMULATOR_HPP_

#include <array>
#include <string_view>

#include "seqbatch/metrics.hpp"
#include "seqbatch/plan.hpp"

namespace seqbatch {

struct CostModel {
  double per_frame_cost = 1.0;
  double per_batch_overhead = 50.0;
  double memory_per_frame = 1.0;

  /// per_frame_cost and memory_per_frame must be > 0, the overhead >= 0.
  void validate() const;
};

struct SimResult {
  double sim_time = 0.0;
  double utterances_per_time = 0.0;
  double peak_memory = 0.0;
};

inline constexpr std::array<std::string_view, 3> kSimFields = {
    "sim_time", "utterances_per_time", "peak_memory"};

SimResult simulate(const EpochPlan& plan, const CostModel& model);

/// Same model, from an already computed report.
SimResult simulate(const MetricsReport& metrics, std::size_t utterances,
                   const CostModel& model);

}  // namespace seqbatch

#endif  // SEQBATCH_SIMULATOR_HPP_
