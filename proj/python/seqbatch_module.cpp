// seqbatch_module.cpp

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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "seqbatch/batching.hpp"
#include "seqbatch/cli/commands.hpp"
#include "seqbatch/cli/config.hpp"
#include "seqbatch/cli/report.hpp"
#include "seqbatch/errors.hpp"
#include "seqbatch/metrics.hpp"
#include "seqbatch/scheduling.hpp"
#include "seqbatch/simulator.hpp"
#include "seqbatch/trace.hpp"

namespace py = pybind11;
using namespace seqbatch;

namespace {

BatchPolicy make_policy(std::optional<std::size_t> batch_size,
                        std::optional<Length> frame_budget,
                        const std::string& mode) {
  if (batch_size.has_value() == frame_budget.has_value())
    throw ConfigError("give exactly one of batch_size or frame_budget");
  if (batch_size) return CountPolicy{*batch_size};
  if (mode != "padded" && mode != "raw")
    throw ConfigError("mode must be \"padded\" or \"raw\"");
  return FrameBudgetPolicy{*frame_budget,
                           mode == "raw" ? BudgetMode::kRaw : BudgetMode::kPadded};
}

py::dict metrics_dict(const MetricsReport& r) {
  py::dict d;
  d["batch_count"] = r.batch_count;
  d["total_real_frames"] = r.total_real_frames;
  d["total_padded_frames"] = r.total_padded_frames;
  d["padding_ratio"] = r.padding_ratio;
  d["mean_intra_batch_std"] = r.mean_intra_batch_std;
  d["inter_batch_std"] = r.inter_batch_std;
  d["max_batch_padded_frames"] = r.max_batch_padded_frames;
  return d;
}

std::vector<std::vector<std::size_t>> batch_members(const EpochPlan& plan) {
  std::vector<std::vector<std::size_t>> out;
  for (const Batch& b : plan.batches) out.push_back(b.members());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Batch-construction strategies for variable-length sequences";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ConfigError>(m, "ConfigError", error.ptr());
  py::register_exception<CorpusError>(m, "CorpusError", error.ptr());
  py::register_exception<PlanError>(m, "PlanError", error.ptr());

  py::class_<Corpus>(m, "Corpus")
      .def(py::init([](const std::vector<std::pair<std::string, Length>>& items) {
             std::vector<Utterance> u;
             for (const auto& [id, len] : items) u.push_back({id, len});
             return Corpus(std::move(u));
           }),
           py::arg("utterances"))
      .def_static("from_lengths", &Corpus::from_lengths, py::arg("lengths"))
      .def_property_readonly("lengths", &Corpus::lengths)
      .def_property_readonly("ids", [](const Corpus& c) {
        std::vector<std::string> ids;
        for (const Utterance& u : c.utterances()) ids.push_back(u.id);
        return ids;
      })
      .def_property_readonly("total_frames", &Corpus::total_frames)
      .def_property_readonly("max_length", &Corpus::max_length)
      .def("__len__", &Corpus::size)
      .def("__eq__", [](const Corpus& a, const Corpus& b) { return a == b; })
      .def("__repr__", [](const Corpus& c) {
        return "<Corpus " + std::to_string(c.size()) + " utterances, " +
               std::to_string(c.total_frames()) + " frames>";
      });

  m.def("load_manifest", &load_manifest, py::arg("path"));
  m.def("save_manifest", &save_manifest, py::arg("path"), py::arg("corpus"));
  m.def(
      "generate_synthetic",
      [](std::size_t count, const std::string& distribution, std::uint64_t seed,
         std::optional<Length> length_cap) {
        return generate_synthetic(
            {count, cli::parse_distribution(distribution), length_cap}, seed);
      },
      py::arg("count"), py::arg("distribution") = "lognormal:5.3,0.6",
      py::arg("seed") = 0, py::arg("length_cap") = py::none(),
      "Distribution strings: uniform:a,b | lognormal:mu,sigma | "
      "bimodal:mu1,s1,mu2,s2,w");
  m.def("chunk_corpus", &chunk_corpus, py::arg("corpus"), py::arg("chunk_size"));

  m.def(
      "plan_random",
      [](const Corpus& c, std::uint64_t seed, std::uint64_t epoch) {
        return plan_random(c, seed, epoch).indices;
      },
      py::arg("corpus"), py::arg("seed"), py::arg("epoch") = 0);
  m.def(
      "plan_sorted",
      [](const Corpus& c, bool descending) {
        return plan_sorted(c, descending ? SortDirection::kDescending
                                         : SortDirection::kAscending)
            .indices;
      },
      py::arg("corpus"), py::arg("descending") = false);
  m.def(
      "plan_alternated",
      [](const Corpus& c, std::size_t n_bins, std::uint64_t seed,
         std::uint64_t epoch) {
        return plan_alternated(c, AlternatedParams{n_bins}, seed, epoch).indices;
      },
      py::arg("corpus"), py::arg("n_bins"), py::arg("seed"), py::arg("epoch") = 0);
  m.def(
      "assign_bucket",
      [](Length length, const std::vector<Length>& boundaries) {
        return assign_bucket(length, BucketSpec(boundaries));
      },
      py::arg("length"), py::arg("boundaries"));
  m.def("bin_sizes", &bin_sizes, py::arg("n"), py::arg("n_bins"));

  py::class_<EpochPlan>(m, "EpochPlan")
      .def_property_readonly("batches", &batch_members)
      .def_property_readonly("strategy",
                             [](const EpochPlan& p) { return p.strategy.name(); })
      .def_readonly("seed", &EpochPlan::seed)
      .def_readonly("epoch", &EpochPlan::epoch)
      .def("flattened", &EpochPlan::flattened)
      .def("to_json", &cli::plan_to_json)
      .def("__len__", [](const EpochPlan& p) { return p.batches.size(); });

  m.def(
      "plan",
      [](const Corpus& c, const std::string& strategy, std::uint64_t seed,
         std::uint64_t epoch, std::optional<std::size_t> batch_size,
         std::optional<Length> frame_budget, const std::string& mode) {
        return plan_epoch(c, cli::parse_strategy(strategy),
                          make_policy(batch_size, frame_budget, mode), seed, epoch);
      },
      py::arg("corpus"), py::arg("strategy"), py::arg("seed") = 0,
      py::arg("epoch") = 0, py::arg("batch_size") = py::none(),
      py::arg("frame_budget") = py::none(), py::arg("mode") = "padded",
      "Build an epoch plan. Strategy strings: random | sorted[:desc] | "
      "bucketing[:width] | alternated:N");
  m.def(
      "batch",
      [](const Corpus& c, const std::vector<std::size_t>& ordering,
         std::optional<std::size_t> batch_size, std::optional<Length> frame_budget,
         const std::string& mode) {
        Ordering o;
        o.indices = ordering;
        return make_batches(o, c, make_policy(batch_size, frame_budget, mode));
      },
      py::arg("corpus"), py::arg("ordering"), py::arg("batch_size") = py::none(),
      py::arg("frame_budget") = py::none(), py::arg("mode") = "padded");
  m.def(
      "plan_from_json",
      [](const std::string& text, const Corpus& c) { return cli::plan_from_json(text, c); },
      py::arg("text"), py::arg("corpus"));

  m.def(
      "evaluate",
      [](const EpochPlan& p, const Corpus& c) { return metrics_dict(evaluate(p, c)); },
      py::arg("plan"), py::arg("corpus"));
  m.def(
      "simulate",
      [](const EpochPlan& p, double per_frame_cost, double per_batch_overhead,
         double memory_per_frame) {
        const SimResult r =
            simulate(p, CostModel{per_frame_cost, per_batch_overhead, memory_per_frame});
        py::dict d;
        d["sim_time"] = r.sim_time;
        d["utterances_per_time"] = r.utterances_per_time;
        d["peak_memory"] = r.peak_memory;
        return d;
      },
      py::arg("plan"), py::arg("per_frame_cost") = 1.0,
      py::arg("per_batch_overhead") = 50.0, py::arg("memory_per_frame") = 1.0);
  m.def(
      "length_series",
      [](const EpochPlan& p, const Corpus& c) { return length_series(p, c); },
      py::arg("plan"), py::arg("corpus"));
  m.def(
      "count_monotone_runs",
      [](const std::vector<Length>& s) { return count_monotone_runs(s); },
      py::arg("series"));

  m.def(
      "same_bin_probability",
      [](std::size_t corpus_size, std::size_t n_bins, std::uint64_t trials,
         std::uint64_t seed) {
        const SameBinEstimate e =
            same_bin_probability(corpus_size, n_bins, trials, seed);
        py::dict d;
        d["probability"] = e.probability;
        d["standard_error"] = e.standard_error;
        d["exact"] = e.analytic;
        d["trials"] = e.trials;
        d["hits"] = e.hits;
        return d;
      },
      py::arg("corpus_size"), py::arg("n_bins"), py::arg("trials") = 100000,
      py::arg("seed") = 1);
  m.def("same_bin_probability_exact", &same_bin_probability_exact,
        py::arg("corpus_size"), py::arg("n_bins"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv = {"seqbatch"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code =
            cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI command; returns (exit_code, stdout, stderr).");
}
