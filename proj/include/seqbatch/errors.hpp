// seqbatch/errors.hpp

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

#ifndef SEQBATCH_ERRORS_HPP_
#define SEQBATCH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace seqbatch {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent configuration (bad parameters, unknown names).
/// The CLI maps this to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed corpus input or violated corpus invariant.
class CorpusError : public Error {
 public:
  using Error::Error;
};

/// A plan cannot be built or does not match its corpus.
class PlanError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqbatch

#endif  // SEQBATCH_ERRORS_HPP_
