// seqbatch/cli/report.hpp

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

// File formats written by the harness.
//
// Report CSV (one row per strategy/seed/epoch), column order fixed:
//   strategy,seed,epoch,batch_count,total_real_frames,total_padded_frames,
//   padding_ratio,mean_intra_batch_std,inter_batch_std,
//   max_batch_padded_frames,sim_time,utterances_per_time,peak_memory
// Reals are printed with 9 significant digits ("%.9g").
//
// Summary CSV: strategy,runs, then <column>_mean,<column>_std for every
// numeric report column from batch_count on.
//
// Plan JSON: {"strategy", "seed", "epoch", "config", "batches": [[i, ...]]}.
// Batch costs are not stored; they follow from the corpus.
//
// Trace CSV: strategy,position,length.

#ifndef SEQBATCH_CLI_REPORT_HPP_
#define SEQBATCH_CLI_REPORT_HPP_

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "seqbatch/corpus.hpp"
#include "seqbatch/metrics.hpp"
#include "seqbatch/plan.hpp"
#include "seqbatch/simulator.hpp"

namespace seqbatch::cli {

struct ReportRow {
  std::string strategy;
  std::uint64_t seed = 0;
  std::uint64_t epoch = 0;
  MetricsReport metrics;
  SimResult sim;
};

inline constexpr std::size_t kNumericColumns =
    kMetricsFields.size() + kSimFields.size();

/// Numeric column names, in CSV order.
std::array<std::string_view, kNumericColumns> numeric_columns();
std::array<double, kNumericColumns> numeric_values(const ReportRow& row);

std::string format_real(double value);

std::string report_csv_header();
std::string report_csv_line(const ReportRow& row);
void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows);
/// Parses a report CSV written by write_report_csv. Throws Error on a bad
/// header or row.
std::vector<ReportRow> read_report_csv(std::istream& in);

struct SummaryRow {
  std::string strategy;
  std::size_t runs = 0;
  std::array<FieldStats, kNumericColumns> fields;
};

/// Groups rows by strategy (first-appearance order) and summarizes each
/// numeric column.
std::vector<SummaryRow> summarize_rows(const std::vector<ReportRow>& rows);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows);

std::string compare_json(const std::vector<ReportRow>& rows,
                         const std::vector<SummaryRow>& summary);

std::string plan_to_json(const EpochPlan& plan);
/// Rebuilds a plan (with recomputed batch costs) from plan_to_json output.
EpochPlan plan_from_json(std::string_view text, const Corpus& corpus);

struct TraceSeries {
  std::string strategy;
  std::vector<Length> lengths;
};

void write_trace_csv(std::ostream& out, const std::vector<TraceSeries>& series);
std::vector<TraceSeries> read_trace_csv(std::istream& in);

/// FNV-1a 64-bit digest of a byte string, used for golden-output checks.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace seqbatch::cli

#endif  // SEQBATCH_CLI_REPORT_HPP_
