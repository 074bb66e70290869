// simulator.cpp

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

#include "seqbatch/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "seqbatch/errors.hpp"

namespace seqbatch {

void CostModel::validate() const {
  const auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(per_frame_cost) || per_frame_cost <= 0.0)
    throw ConfigError("per_frame_cost must be > 0");
  if (!finite(per_batch_overhead) || per_batch_overhead < 0.0)
    throw ConfigError("per_batch_overhead must be >= 0");
  if (!finite(memory_per_frame) || memory_per_frame <= 0.0)
    throw ConfigError("memory_per_frame must be > 0");
}

SimResult simulate(const MetricsReport& metrics, std::size_t utterances,
                   const CostModel& model) {
  model.validate();
  if (metrics.batch_count == 0) throw PlanError("cannot simulate an empty plan");
  SimResult r;
  r.sim_time = model.per_batch_overhead *
                   static_cast<double>(metrics.batch_count) +
               model.per_frame_cost *
                   static_cast<double>(metrics.total_padded_frames);
  r.utterances_per_time = static_cast<double>(utterances) / r.sim_time;
  r.peak_memory = model.memory_per_frame *
                  static_cast<double>(metrics.max_batch_padded_frames);
  return r;
}

SimResult simulate(const EpochPlan& plan, const CostModel& model) {
  MetricsReport m;
  m.batch_count = plan.batches.size();
  for (const Batch& b : plan.batches) {
    m.total_padded_frames += b.padded_frames();
    m.max_batch_padded_frames =
        std::max(m.max_batch_padded_frames, b.padded_frames());
  }
  return simulate(m, plan.utterance_count(), model);
}

}  // namespace seqbatch
