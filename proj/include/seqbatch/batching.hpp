// seqbatch/batching.hpp

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

#ifndef SEQBATCH_BATCHING_HPP_
#define SEQBATCH_BATCHING_HPP_

#include <span>

#include "seqbatch/corpus.hpp"
#include "seqbatch/plan.hpp"

namespace seqbatch {

/// Throws ConfigError for a zero batch size or budget, and PlanError naming
/// the first utterance that cannot fit a frame budget on its own.
void check_policy(const BatchPolicy& policy, const Corpus& corpus);

/// End (exclusive) of the batch that starts at `begin` in `indices` under
/// `policy`. Packing is greedy and never reorders: an index joins the batch
/// unless that would exceed the batch size or frame budget. Assumes
/// check_policy() passed and begin < indices.size().
std::size_t next_batch_end(std::span<const std::size_t> indices,
                           std::size_t begin, const Corpus& corpus,
                           const BatchPolicy& policy);

/// Consecutive slices of `batch_size`; the last one may be shorter.
EpochPlan batch_by_count(const Ordering& ordering, const Corpus& corpus,
                         std::size_t batch_size);

/// Greedy consecutive packing under a frame budget.
EpochPlan batch_by_frame_budget(const Ordering& ordering, const Corpus& corpus,
                                Length budget,
                                BudgetMode mode = BudgetMode::kPadded);

EpochPlan make_batches(const Ordering& ordering, const Corpus& corpus,
                       const BatchPolicy& policy);

/// Cost of a batch under a budget mode.
Length batch_cost(const Batch& batch, BudgetMode mode);

}  // namespace seqbatch

#endif  // SEQBATCH_BATCHING_HPP_
