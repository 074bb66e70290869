// cli/commands.cpp

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

#include "seqbatch/cli/commands.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "seqbatch/errors.hpp"
#include "seqbatch/metrics.hpp"
#include "seqbatch/simulator.hpp"
#include "seqbatch/trace.hpp"

namespace seqbatch::cli {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << bytes;
  if (!out) throw Error("error writing " + path.string());
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
}

EpochPlan plan_one(const Corpus& corpus, const StrategyConfig& strategy,
                   const BatchPolicy& policy, std::uint64_t seed,
                   std::uint64_t epoch) {
  try {
    return plan_epoch(corpus, strategy, policy, seed, epoch);
  } catch (const ConfigError& e) {
    throw ConfigError("strategy " + strategy.name() + ": " + e.what());
  } catch (const Error& e) {
    throw PlanError("strategy " + strategy.name() + ": " + e.what());
  }
}

// Command-line overrides, applied on top of the config file.
struct Overrides {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string seeds;
  std::optional<std::uint64_t> epochs;
  std::vector<std::string> strategies;
  std::optional<std::size_t> batch_size;
  std::optional<Length> frame_budget;
  std::string budget_mode;
  std::optional<Length> chunk_size;
  std::string manifest;
  std::optional<std::size_t> count;
  std::string distribution;
  std::optional<Length> length_cap;
  std::optional<std::uint64_t> corpus_seed;

  void attach(CLI::App& cmd) {
    cmd.add_option("--config", config, "JSON run configuration");
    cmd.add_option("--out", out, "Output directory");
    auto* seed_opt = cmd.add_option("--seed", seed, "Single seed");
    cmd.add_option("--seeds", seeds, "Inclusive seed range a..b")
        ->excludes(seed_opt);
    cmd.add_option("--epochs", epochs, "Epochs per seed");
    cmd.add_option("--strategy", strategies,
                   "name[:params], repeatable; replaces the config list");
    auto* bs = cmd.add_option("--batch-size", batch_size,
                              "Fixed number of utterances per batch");
    cmd.add_option("--frame-budget", frame_budget, "Frames per batch")
        ->excludes(bs);
    cmd.add_option("--budget-mode", budget_mode, "padded or raw")
        ->check(CLI::IsMember({"padded", "raw"}));
    cmd.add_option("--chunk-size", chunk_size,
                   "Split utterances into chunks of at most this length");
    cmd.add_option("--manifest", manifest, "Corpus manifest (TSV)");
    cmd.add_option("--count", count, "Synthetic corpus size");
    cmd.add_option("--distribution", distribution,
                   "uniform:a,b | lognormal:mu,sigma | "
                   "bimodal:mu1,s1,mu2,s2,w");
    cmd.add_option("--length-cap", length_cap, "Clamp synthetic lengths");
    cmd.add_option("--corpus-seed", corpus_seed, "Synthetic corpus seed");
  }

  RunConfig resolve() const {
    RunConfig cfg = config.empty() ? demo_config() : load_config(config);
    if (!out.empty()) cfg.out = out;
    if (seed) cfg.seeds = {*seed};
    if (!seeds.empty()) cfg.seeds = parse_seed_range(seeds);
    if (epochs) cfg.epochs = *epochs;
    if (!strategies.empty()) {
      cfg.strategies.clear();
      for (const auto& s : strategies) cfg.strategies.push_back(parse_strategy(s));
    }
    if (batch_size) cfg.batching = CountPolicy{*batch_size};
    if (frame_budget) {
      BudgetMode mode = BudgetMode::kPadded;
      if (const auto* f = std::get_if<FrameBudgetPolicy>(&cfg.batching))
        mode = f->mode;
      cfg.batching = FrameBudgetPolicy{*frame_budget, mode};
    }
    if (!budget_mode.empty()) {
      auto* f = std::get_if<FrameBudgetPolicy>(&cfg.batching);
      if (!f) throw ConfigError("--budget-mode needs frame-budget batching");
      f->mode = budget_mode == "raw" ? BudgetMode::kRaw : BudgetMode::kPadded;
    }
    if (chunk_size) cfg.chunk_size = *chunk_size;
    if (!manifest.empty()) {
      if (count || !distribution.empty() || length_cap || corpus_seed)
        throw ConfigError("--manifest cannot be combined with synthetic options");
      cfg.corpus = fs::path(manifest);
    } else if (count || !distribution.empty() || length_cap || corpus_seed) {
      SyntheticSource src;
      if (const auto* prev = std::get_if<SyntheticSource>(&cfg.corpus))
        src = *prev;
      else
        src = std::get<SyntheticSource>(demo_config().corpus);
      if (count) src.spec.count = *count;
      if (!distribution.empty())
        src.spec.distribution = parse_distribution(distribution);
      if (length_cap) src.spec.length_cap = *length_cap;
      if (corpus_seed) src.seed = *corpus_seed;
      cfg.corpus = src;
    }
    cfg.validate();
    return cfg;
  }
};

}  // namespace

std::vector<EpochPlan> plan_all(const RunConfig& config, const Corpus& corpus) {
  config.validate();
  std::vector<EpochPlan> plans;
  for (const StrategyConfig& s : config.strategies)
    for (std::uint64_t seed : config.seeds)
      for (std::uint64_t epoch = 0; epoch < config.epochs; ++epoch)
        plans.push_back(plan_one(corpus, s, config.batching, seed, epoch));
  return plans;
}

std::vector<ReportRow> sweep(const RunConfig& config, const Corpus& corpus) {
  std::vector<ReportRow> rows;
  for (const EpochPlan& plan : plan_all(config, corpus)) {
    ReportRow r;
    r.strategy = plan.strategy.name();
    r.seed = plan.seed;
    r.epoch = plan.epoch;
    r.metrics = evaluate(plan, corpus);
    r.sim = simulate(r.metrics, plan.utterance_count(), config.cost_model);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<fs::path> cmd_plan(const RunConfig& config) {
  const Corpus corpus = resolve_corpus(config);
  const auto plans = plan_all(config, corpus);
  ensure_dir(config.out);
  std::vector<fs::path> files;
  for (const EpochPlan& plan : plans) {
    const fs::path path =
        config.out / (plan.strategy.name() + "_" + std::to_string(plan.seed) +
                      "_" + std::to_string(plan.epoch) + ".plan.json");
    write_file(path, plan_to_json(plan));
    files.push_back(path);
  }
  return files;
}

CompareOutput cmd_compare(const RunConfig& config) {
  if (config.strategies.size() < 2)
    throw ConfigError("compare needs at least two strategies");
  const Corpus corpus = resolve_corpus(config);
  CompareOutput result;
  result.rows = sweep(config, corpus);
  result.summary = summarize_rows(result.rows);

  ensure_dir(config.out);
  std::ostringstream csv;
  write_report_csv(csv, result.rows);
  write_file(config.out / "report.csv", csv.str());
  std::ostringstream summary;
  write_summary_csv(summary, result.summary);
  write_file(config.out / "summary.csv", summary.str());
  write_file(config.out / "report.json",
             compare_json(result.rows, result.summary));
  return result;
}

std::vector<TraceSeries> cmd_trace(const RunConfig& config) {
  config.validate();
  const Corpus corpus = resolve_corpus(config);
  std::vector<TraceSeries> series;
  for (const StrategyConfig& s : config.strategies) {
    const EpochPlan plan =
        plan_one(corpus, s, config.batching, config.seeds.front(), 0);
    series.push_back({s.name(), length_series(plan, corpus)});
  }
  ensure_dir(config.out);
  std::ostringstream csv;
  write_trace_csv(csv, series);
  write_file(config.out / "trace.csv", csv.str());
  return series;
}

SameBinEstimate cmd_probability(const ProbabilityArgs& args, std::ostream& out) {
  const SameBinEstimate est = same_bin_probability(
      args.corpus_size, args.n_bins, args.trials, args.seed);
  const auto n = static_cast<double>(args.n_bins);
  out << "corpus_size     " << args.corpus_size << '\n'
      << "n_bins          " << args.n_bins << '\n'
      << "trials          " << est.trials << '\n'
      << "estimate        " << format_real(est.probability) << '\n'
      << "standard_error  " << format_real(est.standard_error) << '\n'
      << "exact           " << format_real(est.analytic) << '\n'
      << "1/(N(N-1))      "
      << (args.n_bins > 1 ? format_real(1.0 / (n * (n - 1.0)))
                          : std::string("undefined"))
      << '\n';
  return est;
}

fs::path cmd_synth(const RunConfig& config) {
  config.validate();
  const Corpus corpus = resolve_corpus(config);
  ensure_dir(config.out);
  const fs::path path = config.out / "corpus.tsv";
  std::ostringstream text;
  write_manifest(text, corpus);
  write_file(path, text.str());
  return path;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Batch-construction strategies for variable-length sequences",
               "seqbatch"};
  app.require_subcommand(1);

  Overrides plan_opts, compare_opts, trace_opts, synth_opts;
  auto* plan = app.add_subcommand("plan", "Write one plan JSON per strategy/seed/epoch");
  plan_opts.attach(*plan);
  auto* compare = app.add_subcommand("compare", "Compare strategies (CSV + JSON)");
  compare_opts.attach(*compare);
  auto* trace = app.add_subcommand("trace", "Write per-position length traces");
  trace_opts.attach(*trace);
  auto* synth = app.add_subcommand("synth", "Write a corpus manifest");
  synth_opts.attach(*synth);

  ProbabilityArgs prob_args;
  auto* prob = app.add_subcommand("probability",
                                  "Estimate the same-bin probability");
  prob->add_option("--bins", prob_args.n_bins, "Number of bins N");
  prob->add_option("--corpus-size", prob_args.corpus_size, "Corpus size M");
  prob->add_option("--trials", prob_args.trials, "Monte Carlo trials");
  prob->add_option("--seed", prob_args.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*plan) {
      const auto files = cmd_plan(plan_opts.resolve());
      out << "wrote " << files.size() << " plan file(s)\n";
    } else if (*compare) {
      const RunConfig cfg = compare_opts.resolve();
      const auto result = cmd_compare(cfg);
      std::ostringstream summary;
      write_summary_csv(summary, result.summary);
      out << summary.str();
      out << "wrote " << (cfg.out / "report.csv").string() << '\n';
    } else if (*trace) {
      const RunConfig cfg = trace_opts.resolve();
      const auto series = cmd_trace(cfg);
      for (const TraceSeries& s : series)
        out << s.strategy << ": " << count_monotone_runs(s.lengths)
            << " monotone run(s)\n";
      out << "wrote " << (cfg.out / "trace.csv").string() << '\n';
    } else if (*synth) {
      out << "wrote " << cmd_synth(synth_opts.resolve()).string() << '\n';
    } else if (*prob) {
      cmd_probability(prob_args, out);
    }
  } catch (const ConfigError& e) {
    err << "seqbatch: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "seqbatch: error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace seqbatch::cli
