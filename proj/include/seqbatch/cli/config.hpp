// seqbatch/cli/config.hpp

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

// Run configuration for the command-line harness. A config is a single JSON
// document:
//
//   {
//     "corpus": {"synthetic": {"count": 1000,
//                              "distribution": {"type": "lognormal",
//                                               "mu": 5.3, "sigma": 0.6},
//                              "length_cap": null, "seed": 0}},
//     "chunk_size": null,
//     "strategies": ["random", "sorted", "bucketing:250",
//                    {"name": "alternated", "bins": 64}],
//     "batching": {"frame_budget": 5000, "mode": "padded"},
//     "seeds": "1..10",
//     "epochs": 1,
//     "out": "out",
//     "cost_model": {"per_frame_cost": 1.0, "per_batch_overhead": 50.0,
//                    "memory_per_frame": 1.0}
//   }
//
// "corpus" may instead be {"manifest": "<path>"}; relative paths resolve
// against the config file's directory. "batching" may be {"batch_size": n}.
// "seeds" takes an integer, a list, or an inclusive "a..b" range. Every key
// is optional and unknown keys are rejected.

#ifndef SEQBATCH_CLI_CONFIG_HPP_
#define SEQBATCH_CLI_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seqbatch/corpus.hpp"
#include "seqbatch/plan.hpp"
#include "seqbatch/simulator.hpp"

namespace seqbatch::cli {

struct SyntheticSource {
  SyntheticSpec spec;
  std::uint64_t seed = 0;
};

using CorpusSource = std::variant<SyntheticSource, std::filesystem::path>;

struct RunConfig {
  CorpusSource corpus;
  std::optional<Length> chunk_size;
  std::vector<StrategyConfig> strategies;
  BatchPolicy batching;
  std::vector<std::uint64_t> seeds;
  std::uint64_t epochs = 1;
  std::filesystem::path out;
  CostModel cost_model;

  /// Throws ConfigError if a field is out of range.
  void validate() const;
};

/// lognormal(5.3, 0.6) x 1000 utterances; random, sorted, bucketing(250) and
/// alternated(8/64/256); padded frame budget 5000; seeds 1..10; one epoch.
RunConfig demo_config();

/// Parses a JSON config on top of demo_config() defaults. `base_dir`
/// resolves relative manifest paths.
RunConfig parse_config(std::string_view json_text,
                       const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// `name[:params]`, e.g. "random", "sorted:desc", "bucketing:250",
/// "bucketing:bounds=100/200/400,select=uniform", "alternated:64".
StrategyConfig parse_strategy(std::string_view text);

/// "a..b" (inclusive) or a single integer.
std::vector<std::uint64_t> parse_seed_range(std::string_view text);

/// "uniform:min,max", "lognormal:mu,sigma" or
/// "bimodal:mu1,sigma1,mu2,sigma2,weight".
LengthDistribution parse_distribution(std::string_view text);

/// Loads or generates the corpus, then applies chunk_size if set.
Corpus resolve_corpus(const RunConfig& config);

}  // namespace seqbatch::cli

#endif  // SEQBATCH_CLI_CONFIG_HPP_
