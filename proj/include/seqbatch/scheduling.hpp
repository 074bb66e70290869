// seqbatch/scheduling.hpp

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

#ifndef SEQBATCH_SCHEDULING_HPP_
#define SEQBATCH_SCHEDULING_HPP_

#include <cstdint>
#include <vector>

#include "seqbatch/corpus.hpp"
#include "seqbatch/plan.hpp"

namespace seqbatch {

/// Length ranges for bucketing. With boundaries b1 < b2 < ... < bk the
/// buckets are [1, b1), [b1, b2), ..., [bk, inf). No boundaries means a
/// single bucket.
class BucketSpec {
 public:
  BucketSpec() = default;
  /// Throws ConfigError unless boundaries are strictly increasing and >= 2.
  explicit BucketSpec(std::vector<Length> boundaries);

  /// Width-w buckets [1, w+1), [w+1, 2w+1), ... covering 1..max_length;
  /// anything longer falls into the last bucket.
  static BucketSpec uniform(Length width, Length max_length);

  /// Resolves BucketingParams against a corpus' longest utterance.
  static BucketSpec from_params(const BucketingParams& params,
                                Length max_length);

  const std::vector<Length>& boundaries() const { return boundaries_; }
  std::size_t bucket_count() const { return boundaries_.size() + 1; }

 private:
  std::vector<Length> boundaries_;
};

/// Index of the bucket whose range contains `length` (binary search).
std::size_t assign_bucket(Length length, const BucketSpec& spec);

/// Seeded Fisher-Yates permutation, distinct per epoch.
Ordering plan_random(const Corpus& corpus, std::uint64_t seed,
                     std::uint64_t epoch);

/// Stable sort by length; identical every epoch.
Ordering plan_sorted(const Corpus& corpus, SortDirection direction);

/// Bucket sizes when `n` items are split into `n_bins` contiguous bins: the
/// first n % n_bins bins hold one extra item.
std::vector<std::size_t> bin_sizes(std::size_t n, std::size_t n_bins);

/// Shuffle, cut into n_bins near-equal bins, then sort bin k (numbered from
/// 1) ascending when k is odd and descending when k is even. Sorting is
/// stable, so equal lengths keep their shuffled order.
Ordering plan_alternated(const Corpus& corpus, const AlternatedParams& params,
                         std::uint64_t seed, std::uint64_t epoch);

/// Bucketed batches. Each bucket is shuffled once, then batches are cut as
/// consecutive spans from a randomly selected non-exhausted bucket until
/// every utterance is used. Spans respect `policy` just as the ordinary
/// batchers do.
EpochPlan plan_bucketing(const Corpus& corpus, const BucketingParams& params,
                         const BatchPolicy& policy, std::uint64_t seed,
                         std::uint64_t epoch);

/// Orders with random / sorted / alternated and batches with `policy`;
/// delegates to plan_bucketing for bucketing.
EpochPlan plan_epoch(const Corpus& corpus, const StrategyConfig& strategy,
                     const BatchPolicy& policy, std::uint64_t seed,
                     std::uint64_t epoch);

struct SameBinEstimate {
  double probability = 0.0;     // Monte Carlo estimate
  double standard_error = 0.0;  // sqrt(p(1-p)/trials)
  double analytic = 0.0;        // exact value for the partition rule
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
};

/// Exact probability that two fixed, distinct items share a bin after a
/// uniform shuffle and partition by bin_sizes(): sum s(s-1) / (M(M-1)).
double same_bin_probability_exact(std::size_t corpus_size, std::size_t n_bins);

/// Monte Carlo estimate of the same quantity, running the actual
/// shuffle-then-partition procedure `trials` times.
SameBinEstimate same_bin_probability(std::size_t corpus_size,
                                     std::size_t n_bins, std::uint64_t trials,
                                     std::uint64_t seed);

}  // namespace seqbatch

#endif  // SEQBATCH_SCHEDULING_HPP_
