// seqbatch/corpus.hpp

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

#ifndef SEQBATCH_CORPUS_HPP_
#define SEQBATCH_CORPUS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace seqbatch {

using Length = std::int64_t;

/// One training sequence, reduced to its length in frames.
struct Utterance {
  std::string id;
  Length length = 0;

  bool operator==(const Utterance&) const = default;
};

/// An immutable, indexed collection of utterances.
///
/// Construction validates that every length is >= 1 and that ids are unique
/// and representable in the manifest format (non-empty, no tab or newline,
/// not starting with '#'). An empty corpus is representable; planners reject
/// it.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Utterance> utterances);

  /// Builds a corpus from bare lengths with ids "0", "1", ...
  static Corpus from_lengths(const std::vector<Length>& lengths);

  const std::vector<Utterance>& utterances() const { return utterances_; }
  const Utterance& operator[](std::size_t i) const { return utterances_[i]; }
  Length length(std::size_t i) const { return utterances_[i].length; }
  std::size_t size() const { return utterances_.size(); }
  bool empty() const { return utterances_.empty(); }
  Length total_frames() const { return total_frames_; }
  Length max_length() const { return max_length_; }
  std::vector<Length> lengths() const;

  bool operator==(const Corpus& other) const {
    return utterances_ == other.utterances_;
  }

 private:
  std::vector<Utterance> utterances_;
  Length total_frames_ = 0;
  Length max_length_ = 0;
};

struct UniformLengths {
  Length min = 1;
  Length max = 1;
};

struct LognormalLengths {
  double mu = 0.0;
  double sigma = 1.0;
};

/// Mixture of two lognormals; `weight` is the probability of the first.
struct BimodalLengths {
  LognormalLengths first;
  LognormalLengths second;
  double weight = 0.5;
};

using LengthDistribution =
    std::variant<UniformLengths, LognormalLengths, BimodalLengths>;

struct SyntheticSpec {
  std::size_t count = 1;
  LengthDistribution distribution = UniformLengths{};
  std::optional<Length> length_cap;
};

/// Throws ConfigError unless the parameters describe a valid corpus.
void validate(const SyntheticSpec& spec);

/// Parses manifest text (`<id>\t<length>` per line, '#' comments). `source`
/// names the input in error messages.
Corpus parse_manifest(std::istream& in, const std::string& source = "<stream>");
Corpus load_manifest(const std::filesystem::path& path);

void write_manifest(std::ostream& out, const Corpus& corpus);
void save_manifest(const std::filesystem::path& path, const Corpus& corpus);

/// Deterministic synthetic corpus. Lengths are rounded to the nearest
/// integer, floored at 1 and clamped to `length_cap`; ids are zero-padded
/// ordinals.
Corpus generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

/// Splits every utterance into pieces of at most `chunk_size` frames. A
/// shorter remainder piece is kept at the end. Piece k of utterance "x" gets
/// id "x#k"; utterances that already fit are copied unchanged.
Corpus chunk_corpus(const Corpus& corpus, Length chunk_size);

}  // namespace seqbatch

#endif  // SEQBATCH_CORPUS_HPP_
