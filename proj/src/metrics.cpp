// metrics.cpp

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

#include "seqbatch/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "seqbatch/errors.hpp"

namespace seqbatch {

namespace {
__extension__ using Wide = __int128;
}  // namespace

std::array<double, 7> metric_values(const MetricsReport& r) {
  return {static_cast<double>(r.batch_count),
          static_cast<double>(r.total_real_frames),
          static_cast<double>(r.total_padded_frames),
          r.padding_ratio,
          r.mean_intra_batch_std,
          r.inter_batch_std,
          static_cast<double>(r.max_batch_padded_frames)};
}

double population_std(std::span<const Length> values) {
  if (values.empty()) return 0.0;
  Wide sum = 0;
  Wide sum_sq = 0;
  for (Length v : values) {
    sum += v;
    sum_sq += static_cast<Wide>(v) * v;
  }
  const auto n = static_cast<Wide>(values.size());
  // n^2 * variance, exact.
  const Wide scaled = n * sum_sq - sum * sum;
  return std::sqrt(static_cast<double>(scaled) /
                   static_cast<double>(n * n));
}

MetricsReport evaluate(const EpochPlan& plan, const Corpus& corpus) {
  if (!is_permutation_of_range(plan.flattened(), corpus.size()))
    throw PlanError("plan does not cover the corpus exactly once");

  MetricsReport r;
  r.batch_count = plan.batches.size();
  if (plan.batches.empty()) return r;

  std::vector<double> means;
  means.reserve(plan.batches.size());
  std::vector<Length> lengths;
  double intra_sum = 0.0;
  for (const Batch& b : plan.batches) {
    r.total_real_frames += b.real_frames();
    r.total_padded_frames += b.padded_frames();
    r.max_batch_padded_frames =
        std::max(r.max_batch_padded_frames, b.padded_frames());

    lengths.clear();
    for (std::size_t i : b.members()) lengths.push_back(corpus.length(i));
    intra_sum += population_std(lengths);
    means.push_back(static_cast<double>(b.real_frames()) /
                    static_cast<double>(b.size()));
  }

  const auto wasted = r.total_padded_frames - r.total_real_frames;
  r.padding_ratio = static_cast<double>(wasted) /
                    static_cast<double>(r.total_padded_frames);
  r.mean_intra_batch_std = intra_sum / static_cast<double>(r.batch_count);
  r.inter_batch_std = summarize(means).std;
  return r;
}

FieldStats summarize(std::span<const double> values) {
  FieldStats s;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  s.min = values.front();
  s.max = values.front();
  for (double v : values) {
    sum += v;
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
  }
  if (s.min == s.max) {
    s.mean = s.min;
    return s;
  }
  s.mean = sum / n;
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(sq / n);
  return s;
}

const FieldStats& MetricsSummary::operator[](std::string_view field) const {
  for (std::size_t k = 0; k < kMetricsFields.size(); ++k)
    if (kMetricsFields[k] == field) return fields[k];
  throw ConfigError("unknown metrics field " + std::string(field));
}

MetricsSummary aggregate(std::span<const MetricsReport> reports) {
  if (reports.empty()) throw ConfigError("cannot aggregate zero reports");
  MetricsSummary out;
  out.count = reports.size();
  std::vector<double> column(reports.size());
  for (std::size_t f = 0; f < kMetricsFields.size(); ++f) {
    for (std::size_t i = 0; i < reports.size(); ++i)
      column[i] = metric_values(reports[i])[f];
    out.fields[f] = summarize(column);
  }
  return out;
}

}  // namespace seqbatch
