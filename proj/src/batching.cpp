// batching.cpp

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

#include "seqbatch/batching.hpp"

#include <algorithm>

#include "seqbatch/errors.hpp"

namespace seqbatch {

namespace {

StrategyParams default_params(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kSorted: return SortedParams{};
    case StrategyKind::kBucketing: return BucketingParams{};
    case StrategyKind::kAlternated: return AlternatedParams{};
    case StrategyKind::kRandom: break;
  }
  return RandomParams{};
}

}  // namespace

void check_policy(const BatchPolicy& policy, const Corpus& corpus) {
  if (const auto* count = std::get_if<CountPolicy>(&policy)) {
    if (count->batch_size < 1) throw ConfigError("batch size must be >= 1");
    return;
  }
  const auto& frame = std::get<FrameBudgetPolicy>(policy);
  if (frame.budget < 1) throw ConfigError("frame budget must be >= 1");
  for (const Utterance& u : corpus.utterances()) {
    if (u.length > frame.budget)
      throw PlanError("utterance \"" + u.id + "\" (" +
                      std::to_string(u.length) +
                      " frames) exceeds the frame budget of " +
                      std::to_string(frame.budget));
  }
}

std::size_t next_batch_end(std::span<const std::size_t> indices,
                           std::size_t begin, const Corpus& corpus,
                           const BatchPolicy& policy) {
  if (const auto* count = std::get_if<CountPolicy>(&policy))
    return std::min(indices.size(), begin + count->batch_size);

  const auto& frame = std::get<FrameBudgetPolicy>(policy);
  std::size_t end = begin;
  Length max_len = 0;
  Length sum = 0;
  while (end < indices.size()) {
    const Length len = corpus.length(indices[end]);
    const Length new_max = std::max(max_len, len);
    const Length new_sum = sum + len;
    const auto new_count = static_cast<Length>(end - begin + 1);
    const Length cost =
        frame.mode == BudgetMode::kPadded ? new_max * new_count : new_sum;
    // The first member always fits; check_policy guarantees len <= budget.
    if (end > begin && cost > frame.budget) break;
    max_len = new_max;
    sum = new_sum;
    ++end;
  }
  return end;
}

EpochPlan make_batches(const Ordering& ordering, const Corpus& corpus,
                       const BatchPolicy& policy) {
  check_policy(policy, corpus);
  if (!is_permutation_of_range(ordering.indices, corpus.size()))
    throw PlanError("ordering is not a permutation of the corpus indices");

  EpochPlan plan;
  plan.strategy.params = default_params(ordering.strategy);
  plan.policy = policy;
  plan.seed = ordering.seed;
  plan.epoch = ordering.epoch;

  const std::span<const std::size_t> indices(ordering.indices);
  std::size_t begin = 0;
  while (begin < indices.size()) {
    const std::size_t end = next_batch_end(indices, begin, corpus, policy);
    plan.batches.emplace_back(
        std::vector<std::size_t>(indices.begin() + begin,
                                 indices.begin() + end),
        corpus);
    begin = end;
  }
  return plan;
}

EpochPlan batch_by_count(const Ordering& ordering, const Corpus& corpus,
                         std::size_t batch_size) {
  return make_batches(ordering, corpus, CountPolicy{batch_size});
}

EpochPlan batch_by_frame_budget(const Ordering& ordering, const Corpus& corpus,
                                Length budget, BudgetMode mode) {
  return make_batches(ordering, corpus, FrameBudgetPolicy{budget, mode});
}

Length batch_cost(const Batch& batch, BudgetMode mode) {
  return mode == BudgetMode::kPadded ? batch.padded_frames()
                                     : batch.real_frames();
}

}  // namespace seqbatch
