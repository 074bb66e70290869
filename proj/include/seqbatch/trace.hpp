// seqbatch/trace.hpp

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

// Shape analysis of length series (position -> length) such as the ones the
// `trace` command emits.

#ifndef SEQBATCH_TRACE_HPP_
#define SEQBATCH_TRACE_HPP_

#include <span>

#include "seqbatch/corpus.hpp"
#include "seqbatch/plan.hpp"

namespace seqbatch {

/// Lengths of `plan`'s members in plan order.
std::vector<Length> length_series(const EpochPlan& plan, const Corpus& corpus);

/// Number of alternating monotone runs: one more than the number of sign
/// changes among the non-zero successive differences. A constant or
/// single-point series is one run; an empty series has none.
std::size_t count_monotone_runs(std::span<const Length> series);

/// Longest contiguous stretch that is non-decreasing or non-increasing.
std::size_t longest_monotone_run(std::span<const Length> series);

bool is_non_decreasing(std::span<const Length> series);

}  // namespace seqbatch

#endif  // SEQBATCH_TRACE_HPP_
