// seqbatch/cli/commands.hpp

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

#ifndef SEQBATCH_CLI_COMMANDS_HPP_
#define SEQBATCH_CLI_COMMANDS_HPP_

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "seqbatch/cli/config.hpp"
#include "seqbatch/cli/report.hpp"
#include "seqbatch/scheduling.hpp"

namespace seqbatch::cli {

/// Process exit codes of the `seqbatch` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitRuntime = 3,
};

/// Plans every (strategy, seed, epoch) of `config` on `corpus`, in that
/// nesting order. Errors are re-thrown prefixed with the strategy name.
std::vector<EpochPlan> plan_all(const RunConfig& config, const Corpus& corpus);

/// Metrics and simulated cost for every plan of plan_all().
std::vector<ReportRow> sweep(const RunConfig& config, const Corpus& corpus);

/// Writes `<out>/<strategy>_<seed>_<epoch>.plan.json` for every plan.
std::vector<std::filesystem::path> cmd_plan(const RunConfig& config);

struct CompareOutput {
  std::vector<ReportRow> rows;
  std::vector<SummaryRow> summary;
};

/// Writes `<out>/report.csv`, `<out>/summary.csv` and `<out>/report.json`.
/// Needs at least two strategies.
CompareOutput cmd_compare(const RunConfig& config);

/// Writes `<out>/trace.csv`: the length at every position of each
/// strategy's epoch-0 plan for the first seed. Bucketing is traced in its
/// realized batch order.
std::vector<TraceSeries> cmd_trace(const RunConfig& config);

struct ProbabilityArgs {
  std::size_t corpus_size = 12;
  std::size_t n_bins = 3;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
};

/// Runs same_bin_probability and prints the estimate, its standard error,
/// the exact value for the partition and 1/(N(N-1)) side by side.
SameBinEstimate cmd_probability(const ProbabilityArgs& args, std::ostream& out);

/// Writes the resolved corpus (generated and/or chunked) to
/// `<out>/corpus.tsv`.
std::filesystem::path cmd_synth(const RunConfig& config);

/// Full command-line entry point; returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace seqbatch::cli

#endif  // SEQBATCH_CLI_COMMANDS_HPP_
