// seqbatch/rng.hpp

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

#ifndef SEQBATCH_RNG_HPP_
#define SEQBATCH_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace seqbatch {

/// SplitMix64 finalizer. Used to derive generator states from (seed, stream).
std::uint64_t mix64(std::uint64_t x);

/// Reproducible random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Everything layered on top (bounded integers, unit doubles,
/// normals, shuffles) is implemented here rather than through the
/// <random> distributions, whose algorithms are implementation-defined.
/// The result is bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t state) : engine_(state) {}

  /// Generator for stream `stream` (an epoch number, a trial block, ...) of a
  /// user seed. Distinct streams of one seed are decorrelated by hashing.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, n) by rejection sampling; n must be > 0.
  std::uint64_t bounded(std::uint64_t n);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal deviate (Box-Muller, one value per call).
  double normal();

  /// In-place Fisher-Yates shuffle, walking from the last element down.
  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(bounded(i));
      using std::swap;
      swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace seqbatch

#endif  // SEQBATCH_RNG_HPP_
