// test_cli.cpp

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

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "seqbatch/cli/commands.hpp"
#include "seqbatch/errors.hpp"
#include "seqbatch/trace.hpp"
#include "test_util.hpp"

using namespace seqbatch;
using namespace seqbatch::cli;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "seqbatch");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_files(const fs::path& dir) {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(dir)) n += e.is_regular_file();
  return n;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("parse_strategy") {
  CHECK(parse_strategy("random").kind() == StrategyKind::kRandom);
  CHECK(parse_strategy("sorted:desc").name() == "sorted-desc");
  CHECK(parse_strategy("bucketing").name() == "bucketing-250");
  CHECK(parse_strategy("bucketing:100").name() == "bucketing-100");
  CHECK(parse_strategy("bucketing:bounds=100/200,select=uniform").name() ==
        "bucketing-100-200-uniform");
  CHECK(parse_strategy("alternated:12").name() == "alternated-12");
  CHECK(parse_strategy("alternated:bins=64").name() == "alternated-64");
  CHECK_THROWS_AS(parse_strategy("alternated"), ConfigError);
  CHECK_THROWS_AS(parse_strategy("random:3"), ConfigError);
  CHECK_THROWS_AS(parse_strategy("shuffled"), ConfigError);
  CHECK_THROWS_AS(parse_strategy("bucketing:width=x"), ConfigError);
  CHECK_THROWS_AS(parse_strategy("alternated:foo=3"), ConfigError);
}

TEST_CASE("parse_seed_range and parse_distribution") {
  CHECK(parse_seed_range("3") == std::vector<std::uint64_t>{3});
  CHECK(parse_seed_range("1..4") == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(parse_seed_range("5..5") == std::vector<std::uint64_t>{5});
  CHECK_THROWS_AS(parse_seed_range("4..1"), ConfigError);
  CHECK_THROWS_AS(parse_seed_range("a..b"), ConfigError);
  CHECK_THROWS_AS(parse_seed_range("-1"), ConfigError);

  CHECK(std::get<UniformLengths>(parse_distribution("uniform:2,9")).max == 9);
  CHECK(std::get<LognormalLengths>(parse_distribution("lognormal:5.3,0.6")).mu == 5.3);
  CHECK(std::get<BimodalLengths>(parse_distribution("bimodal:3,0.2,6,0.3,0.4")).weight ==
        0.4);
  CHECK_THROWS_AS(parse_distribution("uniform:2.5,9"), ConfigError);
  CHECK_THROWS_AS(parse_distribution("lognormal:5"), ConfigError);
  CHECK_THROWS_AS(parse_distribution("gamma:1,2"), ConfigError);
  CHECK_THROWS_AS(parse_distribution("lognormal"), ConfigError);
}

TEST_CASE("parse_config") {
  const RunConfig cfg = parse_config(R"({
    "corpus": {"synthetic": {"count": 50, "distribution": "uniform:1,9", "seed": 4}},
    "strategies": ["random", {"name": "alternated", "bins": 5, "label": "alt"}],
    "batching": {"batch_size": 8},
    "seeds": [3, 7],
    "epochs": 2,
    "out": "x"
  })");
  CHECK(std::get<SyntheticSource>(cfg.corpus).spec.count == 50);
  CHECK(std::get<SyntheticSource>(cfg.corpus).seed == 4);
  REQUIRE(cfg.strategies.size() == 2);
  CHECK(cfg.strategies[1].name() == "alt");
  CHECK(std::get<CountPolicy>(cfg.batching).batch_size == 8);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{3, 7});
  CHECK(cfg.epochs == 2);
  CHECK(cfg.cost_model.per_batch_overhead == 50.0);

  const RunConfig m = parse_config(R"({"corpus": {"manifest": "c.tsv"}})", "/data");
  CHECK(std::get<fs::path>(m.corpus) == fs::path("/data/c.tsv"));

  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"strategy": []})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"strategies": [{"name": "x"}]})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"batching": {"batch_size": 2, "frame_budget": 9}})"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"seeds": "9..1"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"epochs": "two"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"corpus": {}})"), ConfigError);
}

TEST_CASE("demo config file matches the built-in defaults") {
  const RunConfig file = load_config(SEQBATCH_DEMO_CONFIG);
  const RunConfig builtin = demo_config();
  CHECK(file.strategies == builtin.strategies);
  CHECK(file.batching == builtin.batching);
  CHECK(file.seeds == builtin.seeds);
  CHECK(resolve_corpus(file) == resolve_corpus(builtin));
  CHECK_NOTHROW(file.validate());
}

TEST_CASE("report CSV round trip") {
  RunConfig cfg = demo_config();
  cfg.seeds = {1, 2, 3};
  const Corpus corpus = resolve_corpus(cfg);
  const auto rows = sweep(cfg, corpus);
  REQUIRE(rows.size() == 18);
  std::ostringstream out;
  write_report_csv(out, rows);
  CHECK(out.str().substr(0, out.str().find('\n')) ==
        "strategy,seed,epoch,batch_count,total_real_frames,total_padded_frames,"
        "padding_ratio,mean_intra_batch_std,inter_batch_std,"
        "max_batch_padded_frames,sim_time,utterances_per_time,peak_memory");
  std::istringstream in(out.str());
  const auto back = read_report_csv(in);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].strategy == rows[i].strategy);
    CHECK(back[i].seed == rows[i].seed);
    CHECK(back[i].epoch == rows[i].epoch);
    CHECK(report_csv_line(back[i]) == report_csv_line(rows[i]));
    const auto a = numeric_values(back[i]);
    const auto b = numeric_values(rows[i]);
    for (std::size_t k = 0; k < a.size(); ++k)
      CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-8));
  }
  std::istringstream bad("strategy,seed\nx,1\n");
  CHECK_THROWS(read_report_csv(bad));
}

TEST_CASE("plan JSON round trip") {
  const Corpus c = generate_synthetic({200, LognormalLengths{4.0, 0.5}, {}}, 3);
  const StrategyConfig s = parse_strategy("bucketing:bounds=40/80,select=uniform");
  const EpochPlan plan = plan_epoch(c, s, FrameBudgetPolicy{900, BudgetMode::kRaw}, 8, 2);
  const std::string text = plan_to_json(plan);
  const EpochPlan back = plan_from_json(text, c);
  CHECK(back.strategy == plan.strategy);
  CHECK(back.policy == plan.policy);
  CHECK(back.seed == 8);
  CHECK(back.epoch == 2);
  REQUIRE(back.batches.size() == plan.batches.size());
  for (std::size_t b = 0; b < plan.batches.size(); ++b)
    CHECK(back.batches[b].members() == plan.batches[b].members());
  CHECK(plan_to_json(back) == text);
  CHECK_THROWS(plan_from_json("{\"strategy\": 1}", c));
}

TEST_CASE("trace CSV round trip") {
  const std::vector<TraceSeries> series = {{"sorted", {1, 2, 2, 9}},
                                           {"random", {5, 1, 7}}};
  std::ostringstream out;
  write_trace_csv(out, series);
  CHECK(out.str().rfind("strategy,position,length\nsorted,0,1\n", 0) == 0);
  std::istringstream in(out.str());
  const auto back = read_trace_csv(in);
  REQUIRE(back.size() == 2);
  CHECK(back[0].strategy == "sorted");
  CHECK(back[0].lengths == series[0].lengths);
  CHECK(back[1].lengths == series[1].lengths);
}

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("plan: one strategy, one seed, one epoch gives one file") {
  const auto dir = testing::scratch_dir("cli_plan");
  const auto r = run({"plan", "--strategy", "alternated:8", "--seed", "4",
                      "--epochs", "1", "--out", dir.string()});
  CHECK(r.code == kExitOk);
  CHECK(count_files(dir) == 1);
  CHECK(fs::exists(dir / "alternated-8_4_0.plan.json"));
}

TEST_CASE("plan: reruns are byte identical") {
  const auto a = testing::scratch_dir("cli_rerun_a");
  const auto b = testing::scratch_dir("cli_rerun_b");
  for (const auto& dir : {a, b})
    REQUIRE(run({"plan", "--config", SEQBATCH_DEMO_CONFIG, "--seeds", "1..2",
                 "--epochs", "2", "--out", dir.string()})
                .code == kExitOk);
  CHECK(count_files(a) == 6 * 2 * 2);
  for (const auto& e : fs::directory_iterator(a))
    CHECK(testing::read_file(e.path()) ==
          testing::read_file(b / e.path().filename()));
}

TEST_CASE("plan: too many bins is a runtime error naming the strategy") {
  const auto dir = testing::scratch_dir("cli_bins");
  const auto r = run({"plan", "--count", "10", "--strategy", "alternated:64",
                      "--out", dir.string()});
  CHECK(r.code == kExitRuntime);
  CHECK(r.err.find("alternated-64") != std::string::npos);
}

TEST_CASE("exit code 2 for configuration problems") {
  const auto dir = testing::scratch_dir("cli_badcfg");
  write_text(dir / "bad.json", R"({"strategies": [], "bogus": 1})");
  CHECK(run({"plan", "--config", (dir / "bad.json").string()}).code == kExitConfig);
  CHECK(run({"plan", "--config", (dir / "missing.json").string()}).code == kExitConfig);
  CHECK(run({"plan", "--strategy", "nope"}).code == kExitConfig);
  CHECK(run({"plan", "--batch-size", "0", "--out", dir.string()}).code == kExitConfig);
  CHECK(run({"plan", "--manifest", (dir / "none.tsv").string(), "--out",
             dir.string()})
            .code == kExitConfig);
  CHECK(run({"frobnicate"}).code == kExitConfig);
  CHECK(run({}).code == kExitConfig);
  CHECK(run({"compare", "--strategy", "random", "--out", dir.string()}).code ==
        kExitConfig);
}

TEST_CASE("exit code 3 for corpus problems") {
  const auto dir = testing::scratch_dir("cli_badcorpus");
  write_text(dir / "c.tsv", "a\t3\na\t4\n");
  const auto r = run({"plan", "--manifest", (dir / "c.tsv").string(), "--out",
                      dir.string()});
  CHECK(r.code == kExitRuntime);
  CHECK(r.err.find("duplicate id") != std::string::npos);
  const auto big = run({"plan", "--frame-budget", "100", "--out", dir.string()});
  CHECK(big.code == kExitRuntime);
}

TEST_CASE("compare: counts and ordering") {
  const auto dir = testing::scratch_dir("cli_compare");
  RunConfig cfg = demo_config();
  cfg.strategies = {parse_strategy("random"), parse_strategy("sorted")};
  cfg.seeds = parse_seed_range("1..10");
  cfg.out = dir;
  const CompareOutput result = cmd_compare(cfg);
  CHECK(result.rows.size() == 20);
  REQUIRE(result.summary.size() == 2);
  CHECK(result.summary[0].strategy == "random");
  CHECK(result.summary[0].runs == 10);

  std::ifstream csv(dir / "report.csv");
  CHECK(read_report_csv(csv).size() == 20);
  const std::string summary = testing::read_file(dir / "summary.csv");
  CHECK(std::count(summary.begin(), summary.end(), '\n') == 3);
  CHECK(fs::exists(dir / "report.json"));

  for (std::size_t i = 0; i < 10; ++i)
    CHECK(result.rows[10 + i].metrics.padding_ratio <=
          result.rows[i].metrics.padding_ratio);
}

TEST_CASE("trace: shapes of the ordering series") {
  const auto dir = testing::scratch_dir("cli_trace");
  const auto r = run({"trace", "--strategy", "sorted", "--strategy", "alternated:12",
                      "--strategy", "random", "--strategy", "bucketing:250",
                      "--seed", "3", "--out", dir.string()});
  REQUIRE(r.code == kExitOk);
  std::ifstream in(dir / "trace.csv");
  const auto series = read_trace_csv(in);
  REQUIRE(series.size() == 4);
  for (const auto& s : series) CHECK(s.lengths.size() == 1000);
  CHECK(is_non_decreasing(series[0].lengths));
  CHECK(count_monotone_runs(series[1].lengths) == 12);
  CHECK(longest_monotone_run(series[2].lengths) <= 20);
  CHECK(r.out.find("alternated-12: 12 monotone run(s)") != std::string::npos);
}

TEST_CASE("monotone run helpers") {
  const std::vector<Length> v = {1, 2, 2, 5, 3, 3, 1, 4};
  CHECK(count_monotone_runs(v) == 3);
  CHECK(longest_monotone_run(v) == 4);
  CHECK(count_monotone_runs(std::vector<Length>{7, 7, 7}) == 1);
  CHECK(count_monotone_runs(std::vector<Length>{}) == 0);
  CHECK(is_non_decreasing(std::vector<Length>{1, 1, 2}));
  CHECK_FALSE(is_non_decreasing(std::vector<Length>{2, 1}));
}

TEST_CASE("probability output") {
  const auto r = run({"probability", "--corpus-size", "12", "--bins", "3",
                      "--trials", "100000", "--seed", "1"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("exact           0.272727273") != std::string::npos);
  CHECK(r.out.find("1/(N(N-1))      0.166666667") != std::string::npos);
  const auto one = run({"probability", "--corpus-size", "12", "--bins", "1"});
  CHECK(one.out.find("estimate        1\n") != std::string::npos);
  CHECK(one.out.find("undefined") != std::string::npos);
  const auto all = run({"probability", "--corpus-size", "12", "--bins", "12"});
  CHECK(all.out.find("estimate        0\n") != std::string::npos);
  CHECK(run({"probability", "--corpus-size", "3", "--bins", "4"}).code == kExitConfig);
}

TEST_CASE("synth writes a manifest that loads back") {
  const auto dir = testing::scratch_dir("cli_synth");
  REQUIRE(run({"synth", "--count", "25", "--distribution", "uniform:3,30",
               "--corpus-seed", "9", "--out", dir.string()})
              .code == kExitOk);
  const Corpus c = load_manifest(dir / "corpus.tsv");
  CHECK(c == generate_synthetic({25, UniformLengths{3, 30}, {}}, 9));

  const auto out2 = testing::scratch_dir("cli_synth_plan");
  CHECK(run({"plan", "--manifest", (dir / "corpus.tsv").string(), "--strategy",
             "sorted", "--chunk-size", "10", "--out", out2.string()})
            .code == kExitOk);
}

TEST_CASE("tool binary honours the exit-code contract") {
  const auto dir = testing::scratch_dir("cli_tool");
  const std::string tool = SEQBATCH_TOOL;
  const auto tool_exit = [&](const std::string& args) {
    const int status = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  CHECK(tool_exit("plan --strategy random --seed 1 --out " + dir.string()) == 0);
  CHECK(fs::exists(dir / "random_1_0.plan.json"));
  CHECK(tool_exit("plan --strategy bogus") == 2);
  CHECK(tool_exit("plan --count 5 --strategy alternated:9 --out " + dir.string()) == 3);
  CHECK(tool_exit("--help") == 0);
}
