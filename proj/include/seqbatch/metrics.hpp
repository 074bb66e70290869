// seqbatch/metrics.hpp

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

#ifndef SEQBATCH_METRICS_HPP_
#define SEQBATCH_METRICS_HPP_

#include <array>
#include <span>
#include <string_view>

#include "seqbatch/corpus.hpp"
#include "seqbatch/plan.hpp"

namespace seqbatch {

/// Padding and length-variability statistics of one epoch plan. All standard
/// deviations are population deviations.
struct MetricsReport {
  std::size_t batch_count = 0;
  Length total_real_frames = 0;
  Length total_padded_frames = 0;
  /// wasted / padded, i.e. 1 - real / padded.
  double padding_ratio = 0.0;
  /// Mean over batches of the std of member lengths.
  double mean_intra_batch_std = 0.0;
  /// Std of the per-batch mean lengths.
  double inter_batch_std = 0.0;
  Length max_batch_padded_frames = 0;

  bool operator==(const MetricsReport&) const = default;
};

/// Field names of MetricsReport in serialization order.
inline constexpr std::array<std::string_view, 7> kMetricsFields = {
    "batch_count",         "total_real_frames",
    "total_padded_frames", "padding_ratio",
    "mean_intra_batch_std", "inter_batch_std",
    "max_batch_padded_frames"};

/// Values of `report` in kMetricsFields order.
std::array<double, 7> metric_values(const MetricsReport& report);

/// Throws PlanError if the plan's members are not a permutation of the
/// corpus indices.
MetricsReport evaluate(const EpochPlan& plan, const Corpus& corpus);

/// Population std of integer samples, computed from exact integer sums.
double population_std(std::span<const Length> values);

struct FieldStats {
  double mean = 0.0;
  double std = 0.0;  // population
  double min = 0.0;
  double max = 0.0;
};

FieldStats summarize(std::span<const double> values);

/// Per-field summary, indexed like kMetricsFields.
struct MetricsSummary {
  std::size_t count = 0;
  std::array<FieldStats, kMetricsFields.size()> fields;

  const FieldStats& operator[](std::string_view field) const;
};

/// Throws ConfigError on an empty list.
MetricsSummary aggregate(std::span<const MetricsReport> reports);

}  // namespace seqbatch

#endif  // SEQBATCH_METRICS_HPP_
