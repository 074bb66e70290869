// corpus.cpp

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

#include "seqbatch/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "seqbatch/errors.hpp"
#include "seqbatch/rng.hpp"

namespace seqbatch {

namespace {

void check_id(const std::string& id) {
  if (id.empty()) throw CorpusError("empty utterance id");
  if (id.front() == '#')
    throw CorpusError("utterance id \"" + id + "\" starts with '#'");
  if (id.find_first_of("\t\n\r") != std::string::npos)
    throw CorpusError("utterance id \"" + id +
                      "\" contains a tab or line break");
}

std::string ordinal_id(std::size_t i, int width) {
  std::string digits = std::to_string(i);
  if (static_cast<int>(digits.size()) < width)
    digits.insert(0, width - digits.size(), '0');
  return digits;
}

double sample_lognormal(Rng& rng, const LognormalLengths& d) {
  return std::exp(d.mu + d.sigma * rng.normal());
}

void check_lognormal(const LognormalLengths& d, const char* what) {
  if (!std::isfinite(d.mu) || !std::isfinite(d.sigma) || d.sigma < 0.0)
    throw ConfigError(std::string(what) +
                      ": lognormal needs finite mu and sigma >= 0");
}

}  // namespace

Corpus::Corpus(std::vector<Utterance> utterances)
    : utterances_(std::move(utterances)) {
  std::unordered_set<std::string> seen;
  seen.reserve(utterances_.size());
  for (const Utterance& u : utterances_) {
    check_id(u.id);
    if (u.length < 1)
      throw CorpusError("utterance \"" + u.id + "\" has non-positive length " +
                        std::to_string(u.length));
    if (!seen.insert(u.id).second)
      throw CorpusError("duplicate utterance id \"" + u.id + "\"");
    total_frames_ += u.length;
    max_length_ = std::max(max_length_, u.length);
  }
}

Corpus Corpus::from_lengths(const std::vector<Length>& lengths) {
  std::vector<Utterance> utts;
  utts.reserve(lengths.size());
  for (std::size_t i = 0; i < lengths.size(); ++i)
    utts.push_back({std::to_string(i), lengths[i]});
  return Corpus(std::move(utts));
}

std::vector<Length> Corpus::lengths() const {
  std::vector<Length> out;
  out.reserve(utterances_.size());
  for (const Utterance& u : utterances_) out.push_back(u.length);
  return out;
}

Corpus parse_manifest(std::istream& in, const std::string& source) {
  std::vector<Utterance> utts;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.front() == '#') continue;

    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw CorpusError(where + "expected <id><TAB><length>");
    std::string id = line.substr(0, tab);
    const std::string_view field(line.data() + tab + 1, line.size() - tab - 1);
    Length length = 0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), length);
    if (ec != std::errc() || end != field.data() + field.size() ||
        field.empty())
      throw CorpusError(where + "malformed length \"" + std::string(field) +
                        "\"");
    if (length < 1)
      throw CorpusError(where + "non-positive length " +
                        std::to_string(length) + " for \"" + id + "\"");
    if (!seen.insert(id).second)
      throw CorpusError(where + "duplicate id \"" + id + "\"");
    utts.push_back({std::move(id), length});
  }
  if (utts.empty()) throw CorpusError(source + ": empty corpus");
  try {
    return Corpus(std::move(utts));
  } catch (const CorpusError& e) {
    throw CorpusError(source + ": " + e.what());
  }
}

Corpus load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open manifest " + path.string());
  return parse_manifest(in, path.string());
}

void write_manifest(std::ostream& out, const Corpus& corpus) {
  for (const Utterance& u : corpus.utterances())
    out << u.id << '\t' << u.length << '\n';
}

void save_manifest(const std::filesystem::path& path, const Corpus& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write manifest " + path.string());
  write_manifest(out, corpus);
  if (!out) throw Error("error writing manifest " + path.string());
}

void validate(const SyntheticSpec& spec) {
  if (spec.count < 1) throw ConfigError("synthetic corpus count must be >= 1");
  if (spec.length_cap && *spec.length_cap < 1)
    throw ConfigError("length_cap must be >= 1");
  std::visit(
      [](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, UniformLengths>) {
          if (d.min < 1 || d.max < d.min)
            throw ConfigError("uniform lengths need 1 <= min <= max");
        } else if constexpr (std::is_same_v<D, LognormalLengths>) {
          check_lognormal(d, "lognormal");
        } else {
          check_lognormal(d.first, "bimodal first component");
          check_lognormal(d.second, "bimodal second component");
          if (!(d.weight >= 0.0 && d.weight <= 1.0))
            throw ConfigError("bimodal weight must lie in [0, 1]");
        }
      },
      spec.distribution);
}

Corpus generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
  validate(spec);
  Rng rng = Rng::for_stream(seed, 0x5eed);

  const int width =
      static_cast<int>(std::to_string(spec.count - 1).size());
  std::vector<Utterance> utts;
  utts.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    Length length = std::visit(
        [&rng](const auto& d) -> Length {
          using D = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<D, UniformLengths>) {
            const auto span = static_cast<std::uint64_t>(d.max - d.min) + 1;
            return d.min + static_cast<Length>(rng.bounded(span));
          } else {
            double x;
            if constexpr (std::is_same_v<D, LognormalLengths>) {
              x = sample_lognormal(rng, d);
            } else {
              const bool first = rng.uniform01() < d.weight;
              x = sample_lognormal(rng, first ? d.first : d.second);
            }
            // Saturate before rounding; exp() can overflow to inf.
            x = std::min(x, 1e18);
            return static_cast<Length>(std::llround(x));
          }
        },
        spec.distribution);
    length = std::max<Length>(length, 1);
    if (spec.length_cap) length = std::min(length, *spec.length_cap);
    utts.push_back({ordinal_id(i, width), length});
  }
  return Corpus(std::move(utts));
}

Corpus chunk_corpus(const Corpus& corpus, Length chunk_size) {
  if (chunk_size < 1)
    throw ConfigError("chunk size must be >= 1, got " +
                      std::to_string(chunk_size));
  std::vector<Utterance> out;
  for (const Utterance& u : corpus.utterances()) {
    if (u.length <= chunk_size) {
      out.push_back(u);
      continue;
    }
    const Length full = u.length / chunk_size;
    const Length rest = u.length % chunk_size;
    for (Length k = 0; k < full; ++k)
      out.push_back({u.id + "#" + std::to_string(k), chunk_size});
    if (rest > 0)
      out.push_back({u.id + "#" + std::to_string(full), rest});
  }
  return Corpus(std::move(out));
}

}  // namespace seqbatch
