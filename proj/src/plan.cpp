// plan.cpp

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

#include "seqbatch/plan.hpp"

#include <algorithm>

#include "seqbatch/errors.hpp"

namespace seqbatch {

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kRandom: return "random";
    case StrategyKind::kSorted: return "sorted";
    case StrategyKind::kBucketing: return "bucketing";
    case StrategyKind::kAlternated: return "alternated";
  }
  return "unknown";
}

std::string_view to_string(BudgetMode mode) {
  return mode == BudgetMode::kPadded ? "padded" : "raw";
}

StrategyKind StrategyConfig::kind() const {
  return static_cast<StrategyKind>(params.index());
}

std::string StrategyConfig::default_label() const {
  struct Labeler {
    std::string operator()(const RandomParams&) const { return "random"; }
    std::string operator()(const SortedParams& p) const {
      return p.direction == SortDirection::kAscending ? "sorted"
                                                      : "sorted-desc";
    }
    std::string operator()(const BucketingParams& p) const {
      std::string s = "bucketing";
      if (p.width) {
        s += "-" + std::to_string(*p.width);
      } else {
        for (Length b : p.boundaries) s += "-" + std::to_string(b);
      }
      if (p.selection == BucketSelection::kUniform) s += "-uniform";
      return s;
    }
    std::string operator()(const AlternatedParams& p) const {
      return "alternated-" + std::to_string(p.n_bins);
    }
  };
  return std::visit(Labeler{}, params);
}

std::string StrategyConfig::name() const {
  return label.empty() ? default_label() : label;
}

Batch::Batch(std::vector<std::size_t> members, const Corpus& corpus)
    : members_(std::move(members)) {
  if (members_.empty()) throw PlanError("empty batch");
  for (std::size_t i : members_) {
    if (i >= corpus.size())
      throw PlanError("batch member " + std::to_string(i) +
                      " out of range for corpus of " +
                      std::to_string(corpus.size()));
    max_len_ = std::max(max_len_, corpus.length(i));
    real_frames_ += corpus.length(i);
  }
}

std::vector<std::size_t> EpochPlan::flattened() const {
  std::vector<std::size_t> out;
  out.reserve(utterance_count());
  for (const Batch& b : batches)
    out.insert(out.end(), b.members().begin(), b.members().end());
  return out;
}

std::size_t EpochPlan::utterance_count() const {
  std::size_t n = 0;
  for (const Batch& b : batches) n += b.size();
  return n;
}

bool is_permutation_of_range(std::span<const std::size_t> indices,
                             std::size_t n) {
  if (indices.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t i : indices) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

}  // namespace seqbatch
