// cli/json_io.hpp

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

// JSON conversions shared by the config reader and the plan writer. Private to
// the cli library.

#ifndef SEQBATCH_CLI_JSON_IO_HPP_
#define SEQBATCH_CLI_JSON_IO_HPP_

#include "json.hpp"
#include "seqbatch/plan.hpp"

namespace seqbatch::cli {

using ojson = nlohmann::ordered_json;

/// Accepts the string shorthand or the object form
/// {"name", "label", "direction", "width", "boundaries", "selection", "bins"}.
StrategyConfig strategy_from_json(const ojson& j);
ojson strategy_to_json(const StrategyConfig& s);

/// {"batch_size": n} or {"frame_budget": n, "mode": "padded"|"raw"}.
BatchPolicy policy_from_json(const ojson& j);
ojson policy_to_json(const BatchPolicy& p);

}  // namespace seqbatch::cli

#endif  // SEQBATCH_CLI_JSON_IO_HPP_
