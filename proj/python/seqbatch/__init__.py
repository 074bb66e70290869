# __init__.py

# Copyright 2026  The seqbatch Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
# WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
# MERCHANTABLITY OR NON-INFRINGEMENT.
# See the Apache 2 License for the specific language governing permissions and
# limitations under the License.

"""Batch-construction strategies for variable-length sequences."""

from ._core import (
    Corpus,
    EpochPlan,
    Error,
    ConfigError,
    CorpusError,
    PlanError,
    assign_bucket,
    batch,
    bin_sizes,
    chunk_corpus,
    count_monotone_runs,
    evaluate,
    generate_synthetic,
    length_series,
    load_manifest,
    plan,
    plan_alternated,
    plan_from_json,
    plan_random,
    plan_sorted,
    run_cli,
    same_bin_probability,
    same_bin_probability_exact,
    save_manifest,
    simulate,
)

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "EpochPlan",
    "Error",
    "ConfigError",
    "CorpusError",
    "PlanError",
    "assign_bucket",
    "batch",
    "bin_sizes",
    "chunk_corpus",
    "count_monotone_runs",
    "evaluate",
    "generate_synthetic",
    "length_series",
    "load_manifest",
    "plan",
    "plan_alternated",
    "plan_from_json",
    "plan_random",
    "plan_sorted",
    "run_cli",
    "same_bin_probability",
    "same_bin_probability_exact",
    "save_manifest",
    "simulate",
]
