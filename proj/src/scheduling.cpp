// scheduling.cpp

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

#include "seqbatch/scheduling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

#include "seqbatch/batching.hpp"
#include "seqbatch/errors.hpp"
#include "seqbatch/rng.hpp"

namespace seqbatch {

namespace {

void require_non_empty(const Corpus& corpus, std::string_view what) {
  if (corpus.empty())
    throw PlanError(std::string(what) + ": corpus is empty");
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

void sort_by_length(std::span<std::size_t> items, const Corpus& corpus,
                    SortDirection direction) {
  if (direction == SortDirection::kAscending) {
    std::stable_sort(items.begin(), items.end(),
                     [&](std::size_t a, std::size_t b) {
                       return corpus.length(a) < corpus.length(b);
                     });
  } else {
    std::stable_sort(items.begin(), items.end(),
                     [&](std::size_t a, std::size_t b) {
                       return corpus.length(a) > corpus.length(b);
                     });
  }
}

}  // namespace

BucketSpec::BucketSpec(std::vector<Length> boundaries)
    : boundaries_(std::move(boundaries)) {
  Length prev = 1;
  for (Length b : boundaries_) {
    if (b <= prev)
      throw ConfigError(
          "bucket boundaries must be strictly increasing and >= 2, got " +
          std::to_string(b) + " after " + std::to_string(prev));
    prev = b;
  }
}

BucketSpec BucketSpec::uniform(Length width, Length max_length) {
  if (width < 1) throw ConfigError("bucket width must be >= 1");
  std::vector<Length> bounds;
  for (Length b = width + 1; b <= max_length; b += width) bounds.push_back(b);
  return BucketSpec(std::move(bounds));
}

BucketSpec BucketSpec::from_params(const BucketingParams& params,
                                   Length max_length) {
  if (params.width && !params.boundaries.empty())
    throw ConfigError("bucketing takes either a width or boundaries, not both");
  if (params.width) return uniform(*params.width, max_length);
  return BucketSpec(params.boundaries);
}

std::size_t assign_bucket(Length length, const BucketSpec& spec) {
  const auto& b = spec.boundaries();
  return static_cast<std::size_t>(
      std::upper_bound(b.begin(), b.end(), length) - b.begin());
}

Ordering plan_random(const Corpus& corpus, std::uint64_t seed,
                     std::uint64_t epoch) {
  require_non_empty(corpus, "random");
  Ordering out{identity(corpus.size()), StrategyKind::kRandom, epoch, seed};
  Rng rng = Rng::for_stream(seed, epoch);
  rng.shuffle(std::span<std::size_t>(out.indices));
  return out;
}

Ordering plan_sorted(const Corpus& corpus, SortDirection direction) {
  require_non_empty(corpus, "sorted");
  Ordering out{identity(corpus.size()), StrategyKind::kSorted, 0, 0};
  sort_by_length(out.indices, corpus, direction);
  return out;
}

std::vector<std::size_t> bin_sizes(std::size_t n, std::size_t n_bins) {
  if (n_bins == 0) throw ConfigError("number of bins must be >= 1");
  std::vector<std::size_t> sizes(n_bins, n / n_bins);
  for (std::size_t k = 0; k < n % n_bins; ++k) ++sizes[k];
  return sizes;
}

Ordering plan_alternated(const Corpus& corpus, const AlternatedParams& params,
                         std::uint64_t seed, std::uint64_t epoch) {
  require_non_empty(corpus, "alternated");
  if (params.n_bins < 1 || params.n_bins > corpus.size())
    throw PlanError("alternated: n_bins " + std::to_string(params.n_bins) +
                    " must lie in [1, " + std::to_string(corpus.size()) +
                    "]");

  Ordering out = plan_random(corpus, seed, epoch);
  out.strategy = StrategyKind::kAlternated;

  std::span<std::size_t> rest(out.indices);
  const auto sizes = bin_sizes(corpus.size(), params.n_bins);
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    // Bins are numbered from 1: odd bins ascend, even bins descend.
    const bool odd = (k + 1) % 2 == 1;
    sort_by_length(rest.first(sizes[k]), corpus,
                   odd ? SortDirection::kAscending : SortDirection::kDescending);
    rest = rest.subspan(sizes[k]);
  }
  return out;
}

EpochPlan plan_bucketing(const Corpus& corpus, const BucketingParams& params,
                         const BatchPolicy& policy, std::uint64_t seed,
                         std::uint64_t epoch) {
  require_non_empty(corpus, "bucketing");
  check_policy(policy, corpus);
  const BucketSpec spec = BucketSpec::from_params(params, corpus.max_length());

  std::vector<std::vector<std::size_t>> buckets(spec.bucket_count());
  for (std::size_t i = 0; i < corpus.size(); ++i)
    buckets[assign_bucket(corpus.length(i), spec)].push_back(i);

  Rng rng = Rng::for_stream(seed, epoch);
  for (auto& bucket : buckets) rng.shuffle(std::span<std::size_t>(bucket));

  EpochPlan plan;
  plan.strategy.params = params;
  plan.policy = policy;
  plan.seed = seed;
  plan.epoch = epoch;

  std::vector<std::size_t> cursor(buckets.size(), 0);
  std::size_t remaining = corpus.size();
  std::vector<std::size_t> open;
  while (remaining > 0) {
    std::size_t pick = 0;
    if (params.selection == BucketSelection::kWeighted) {
      auto r = rng.bounded(remaining);
      while (r >= buckets[pick].size() - cursor[pick]) {
        r -= buckets[pick].size() - cursor[pick];
        ++pick;
      }
    } else {
      open.clear();
      for (std::size_t k = 0; k < buckets.size(); ++k)
        if (cursor[k] < buckets[k].size()) open.push_back(k);
      pick = open[rng.bounded(open.size())];
    }

    const std::span<const std::size_t> bucket(buckets[pick]);
    const std::size_t end =
        next_batch_end(bucket, cursor[pick], corpus, policy);
    plan.batches.emplace_back(
        std::vector<std::size_t>(bucket.begin() + cursor[pick],
                                 bucket.begin() + end),
        corpus);
    remaining -= end - cursor[pick];
    cursor[pick] = end;
  }
  return plan;
}

EpochPlan plan_epoch(const Corpus& corpus, const StrategyConfig& strategy,
                     const BatchPolicy& policy, std::uint64_t seed,
                     std::uint64_t epoch) {
  EpochPlan plan = std::visit(
      [&](const auto& p) -> EpochPlan {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, RandomParams>) {
          return make_batches(plan_random(corpus, seed, epoch), corpus, policy);
        } else if constexpr (std::is_same_v<P, SortedParams>) {
          Ordering o = plan_sorted(corpus, p.direction);
          o.seed = seed;
          o.epoch = epoch;
          return make_batches(o, corpus, policy);
        } else if constexpr (std::is_same_v<P, BucketingParams>) {
          return plan_bucketing(corpus, p, policy, seed, epoch);
        } else {
          return make_batches(plan_alternated(corpus, p, seed, epoch), corpus,
                              policy);
        }
      },
      strategy.params);
  plan.strategy = strategy;
  return plan;
}

double same_bin_probability_exact(std::size_t corpus_size,
                                  std::size_t n_bins) {
  if (corpus_size < 2) throw ConfigError("corpus size must be >= 2");
  if (n_bins < 1 || n_bins > corpus_size)
    throw ConfigError("n_bins must lie in [1, corpus size]");
  double pairs = 0.0;
  for (std::size_t s : bin_sizes(corpus_size, n_bins))
    pairs += static_cast<double>(s) * static_cast<double>(s - 1);
  const double m = static_cast<double>(corpus_size);
  return pairs / (m * (m - 1.0));
}

SameBinEstimate same_bin_probability(std::size_t corpus_size,
                                     std::size_t n_bins, std::uint64_t trials,
                                     std::uint64_t seed) {
  SameBinEstimate est;
  est.analytic = same_bin_probability_exact(corpus_size, n_bins);
  if (trials < 1) throw ConfigError("trials must be >= 1");

  // bin_of[pos] = bin that position `pos` falls into after partitioning.
  std::vector<std::size_t> bin_of;
  bin_of.reserve(corpus_size);
  const auto sizes = bin_sizes(corpus_size, n_bins);
  for (std::size_t k = 0; k < sizes.size(); ++k)
    bin_of.insert(bin_of.end(), sizes[k], k);

  Rng rng = Rng::for_stream(seed, 0);
  std::vector<std::size_t> order(corpus_size);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(std::span<std::size_t>(order));
    std::size_t pos_a = 0;
    std::size_t pos_b = 0;
    for (std::size_t p = 0; p < corpus_size; ++p) {
      if (order[p] == 0) pos_a = p;
      if (order[p] == 1) pos_b = p;
    }
    if (bin_of[pos_a] == bin_of[pos_b]) ++est.hits;
  }
  est.trials = trials;
  const double p =
      static_cast<double>(est.hits) / static_cast<double>(est.trials);
  est.probability = p;
  est.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return est;
}

}  // namespace seqbatch
