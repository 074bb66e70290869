// seqbatch/plan.hpp

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

// Value types shared by the scheduling, batching and metrics stages: strategy
// and batching configuration, orderings, batches and epoch plans.

#ifndef SEQBATCH_PLAN_HPP_
#define SEQBATCH_PLAN_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seqbatch/corpus.hpp"

namespace seqbatch {

enum class StrategyKind { kRandom, kSorted, kBucketing, kAlternated };

std::string_view to_string(StrategyKind kind);

enum class SortDirection { kAscending, kDescending };

/// How plan_bucketing picks the bucket for the next batch.
enum class BucketSelection {
  kWeighted,  // proportional to the bucket's remaining count
  kUniform,   // uniform over non-exhausted buckets
};

struct RandomParams {
  bool operator==(const RandomParams&) const = default;
};

struct SortedParams {
  SortDirection direction = SortDirection::kAscending;
  bool operator==(const SortedParams&) const = default;
};

/// Either a uniform bucket width or explicit boundaries (exactly one set).
struct BucketingParams {
  std::optional<Length> width;
  std::vector<Length> boundaries;
  BucketSelection selection = BucketSelection::kWeighted;
  bool operator==(const BucketingParams&) const = default;
};

struct AlternatedParams {
  std::size_t n_bins = 1;
  bool operator==(const AlternatedParams&) const = default;
};

using StrategyParams =
    std::variant<RandomParams, SortedParams, BucketingParams, AlternatedParams>;

struct StrategyConfig {
  StrategyParams params;
  /// Name used in file names and report rows; defaults to default_label().
  std::string label;

  StrategyKind kind() const;
  std::string default_label() const;
  /// `label` if set, else default_label().
  std::string name() const;

  bool operator==(const StrategyConfig&) const = default;
};

struct CountPolicy {
  std::size_t batch_size = 1;
  bool operator==(const CountPolicy&) const = default;
};

enum class BudgetMode {
  kPadded,  // max_len * count
  kRaw,     // sum of lengths
};

std::string_view to_string(BudgetMode mode);

struct FrameBudgetPolicy {
  Length budget = 1;
  BudgetMode mode = BudgetMode::kPadded;
  bool operator==(const FrameBudgetPolicy&) const = default;
};

using BatchPolicy = std::variant<CountPolicy, FrameBudgetPolicy>;

/// An epoch's sequence order: a permutation of corpus indices.
struct Ordering {
  std::vector<std::size_t> indices;
  StrategyKind strategy = StrategyKind::kRandom;
  std::uint64_t epoch = 0;
  std::uint64_t seed = 0;
};

/// An ordered, non-empty group of corpus indices with its padding cost.
class Batch {
 public:
  Batch(std::vector<std::size_t> members, const Corpus& corpus);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  Length max_len() const { return max_len_; }
  Length real_frames() const { return real_frames_; }
  Length padded_frames() const {
    return max_len_ * static_cast<Length>(members_.size());
  }
  Length wasted_frames() const { return padded_frames() - real_frames_; }

 private:
  std::vector<std::size_t> members_;
  Length max_len_ = 0;
  Length real_frames_ = 0;
};

struct EpochPlan {
  std::vector<Batch> batches;
  StrategyConfig strategy;
  BatchPolicy policy;
  std::uint64_t seed = 0;
  std::uint64_t epoch = 0;

  /// Members of all batches, concatenated in plan order.
  std::vector<std::size_t> flattened() const;
  std::size_t utterance_count() const;
};

/// True iff `indices` contains each of 0..n-1 exactly once.
bool is_permutation_of_range(std::span<const std::size_t> indices,
                             std::size_t n);

}  // namespace seqbatch

#endif  // SEQBATCH_PLAN_HPP_
