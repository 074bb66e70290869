// cli/config.cpp

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

#include "seqbatch/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json_io.hpp"
#include "seqbatch/errors.hpp"

namespace seqbatch::cli {

namespace {

using json = ojson;

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size())
    throw ConfigError("invalid " + std::string(what) + " \"" +
                      std::string(text) + "\"");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         std::string_view where) {
  if (!obj.is_object())
    throw ConfigError(std::string(where) + " must be a JSON object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items())
    if (!keys.count(key))
      throw ConfigError("unknown key \"" + key + "\" in " + std::string(where));
}

SortDirection parse_direction(std::string_view text) {
  if (text == "asc" || text == "ascending") return SortDirection::kAscending;
  if (text == "desc" || text == "descending") return SortDirection::kDescending;
  throw ConfigError("unknown sort direction \"" + std::string(text) + "\"");
}

BucketSelection parse_selection(std::string_view text) {
  if (text == "weighted") return BucketSelection::kWeighted;
  if (text == "uniform") return BucketSelection::kUniform;
  throw ConfigError("unknown bucket selection \"" + std::string(text) + "\"");
}

BudgetMode parse_budget_mode(std::string_view text) {
  if (text == "padded") return BudgetMode::kPadded;
  if (text == "raw") return BudgetMode::kRaw;
  throw ConfigError("unknown budget mode \"" + std::string(text) + "\"");
}

StrategyConfig strategy_from_json_impl(const json& j) {
  if (j.is_string()) return parse_strategy(j.get<std::string>());
  reject_unknown_keys(j,
                      {"name", "label", "direction", "width", "boundaries",
                       "selection", "bins"},
                      "strategy");
  const std::string name = j.at("name").get<std::string>();
  StrategyConfig s;
  if (name == "random") {
    s.params = RandomParams{};
  } else if (name == "sorted") {
    SortedParams p;
    if (j.contains("direction"))
      p.direction = parse_direction(j["direction"].get<std::string>());
    s.params = p;
  } else if (name == "bucketing") {
    BucketingParams p;
    if (j.contains("width")) p.width = j["width"].get<Length>();
    if (j.contains("boundaries"))
      p.boundaries = j["boundaries"].get<std::vector<Length>>();
    if (j.contains("selection"))
      p.selection = parse_selection(j["selection"].get<std::string>());
    if (!p.width && p.boundaries.empty()) p.width = 250;
    s.params = p;
  } else if (name == "alternated") {
    s.params = AlternatedParams{j.at("bins").get<std::size_t>()};
  } else {
    throw ConfigError("unknown strategy \"" + name + "\"");
  }
  if (j.contains("label")) s.label = j["label"].get<std::string>();
  return s;
}

std::vector<std::uint64_t> seeds_from_json(const json& j) {
  if (j.is_number_unsigned()) return {j.get<std::uint64_t>()};
  if (j.is_string()) return parse_seed_range(j.get<std::string>());
  if (j.is_array()) return j.get<std::vector<std::uint64_t>>();
  throw ConfigError("seeds must be an integer, a list or \"a..b\"");
}

LognormalLengths lognormal_from_json(const json& j, std::string_view where) {
  reject_unknown_keys(j, {"mu", "sigma"}, where);
  return {j.at("mu").get<double>(), j.at("sigma").get<double>()};
}

LengthDistribution distribution_from_json(const json& j) {
  if (j.is_string()) return parse_distribution(j.get<std::string>());
  const std::string type = j.at("type").get<std::string>();
  if (type == "uniform") {
    reject_unknown_keys(j, {"type", "min", "max"}, "uniform distribution");
    return UniformLengths{j.at("min").get<Length>(), j.at("max").get<Length>()};
  }
  if (type == "lognormal") {
    reject_unknown_keys(j, {"type", "mu", "sigma"}, "lognormal distribution");
    return LognormalLengths{j.at("mu").get<double>(),
                            j.at("sigma").get<double>()};
  }
  if (type == "bimodal") {
    reject_unknown_keys(j, {"type", "first", "second", "weight"},
                        "bimodal distribution");
    return BimodalLengths{lognormal_from_json(j.at("first"), "bimodal.first"),
                          lognormal_from_json(j.at("second"), "bimodal.second"),
                          j.at("weight").get<double>()};
  }
  throw ConfigError("unknown distribution type \"" + type + "\"");
}

void apply_json(RunConfig& cfg, const json& root,
                const std::filesystem::path& base_dir) {
  reject_unknown_keys(root,
                      {"corpus", "chunk_size", "strategies", "batching",
                       "seeds", "epochs", "out", "cost_model"},
                      "config");
  if (root.contains("corpus")) {
    const json& c = root["corpus"];
    reject_unknown_keys(c, {"synthetic", "manifest"}, "corpus");
    if (c.contains("synthetic") == c.contains("manifest"))
      throw ConfigError("corpus needs exactly one of synthetic or manifest");
    if (c.contains("manifest")) {
      std::filesystem::path p = c["manifest"].get<std::string>();
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      cfg.corpus = p;
    } else {
      const json& s = c["synthetic"];
      reject_unknown_keys(s, {"count", "distribution", "length_cap", "seed"},
                          "corpus.synthetic");
      SyntheticSource src;
      if (const auto* prev = std::get_if<SyntheticSource>(&cfg.corpus))
        src = *prev;
      if (s.contains("count")) src.spec.count = s["count"].get<std::size_t>();
      if (s.contains("distribution"))
        src.spec.distribution = distribution_from_json(s["distribution"]);
      if (s.contains("length_cap")) {
        if (s["length_cap"].is_null())
          src.spec.length_cap.reset();
        else
          src.spec.length_cap = s["length_cap"].get<Length>();
      }
      if (s.contains("seed")) src.seed = s["seed"].get<std::uint64_t>();
      cfg.corpus = src;
    }
  }
  if (root.contains("chunk_size")) {
    if (root["chunk_size"].is_null())
      cfg.chunk_size.reset();
    else
      cfg.chunk_size = root["chunk_size"].get<Length>();
  }
  if (root.contains("strategies")) {
    cfg.strategies.clear();
    for (const json& s : root["strategies"])
      cfg.strategies.push_back(strategy_from_json_impl(s));
  }
  if (root.contains("batching"))
    cfg.batching = policy_from_json(root["batching"]);
  if (root.contains("seeds")) cfg.seeds = seeds_from_json(root["seeds"]);
  if (root.contains("epochs")) cfg.epochs = root["epochs"].get<std::uint64_t>();
  if (root.contains("out")) cfg.out = root["out"].get<std::string>();
  if (root.contains("cost_model")) {
    const json& m = root["cost_model"];
    reject_unknown_keys(
        m, {"per_frame_cost", "per_batch_overhead", "memory_per_frame"},
        "cost_model");
    if (m.contains("per_frame_cost"))
      cfg.cost_model.per_frame_cost = m["per_frame_cost"].get<double>();
    if (m.contains("per_batch_overhead"))
      cfg.cost_model.per_batch_overhead = m["per_batch_overhead"].get<double>();
    if (m.contains("memory_per_frame"))
      cfg.cost_model.memory_per_frame = m["memory_per_frame"].get<double>();
  }
}

}  // namespace

StrategyConfig strategy_from_json(const ojson& j) {
  return strategy_from_json_impl(j);
}

ojson strategy_to_json(const StrategyConfig& s) {
  ojson j;
  std::visit(
      [&j](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, RandomParams>) {
          j["name"] = "random";
        } else if constexpr (std::is_same_v<P, SortedParams>) {
          j["name"] = "sorted";
          j["direction"] = p.direction == SortDirection::kAscending
                               ? "ascending"
                               : "descending";
        } else if constexpr (std::is_same_v<P, BucketingParams>) {
          j["name"] = "bucketing";
          if (p.width) j["width"] = *p.width;
          if (!p.boundaries.empty()) j["boundaries"] = p.boundaries;
          j["selection"] =
              p.selection == BucketSelection::kWeighted ? "weighted" : "uniform";
        } else {
          j["name"] = "alternated";
          j["bins"] = p.n_bins;
        }
      },
      s.params);
  if (!s.label.empty()) j["label"] = s.label;
  return j;
}

BatchPolicy policy_from_json(const ojson& b) {
  reject_unknown_keys(b, {"batch_size", "frame_budget", "mode"}, "batching");
  if (b.contains("batch_size") == b.contains("frame_budget"))
    throw ConfigError("batching needs exactly one of batch_size or frame_budget");
  if (b.contains("batch_size")) {
    if (b.contains("mode"))
      throw ConfigError("batching.mode only applies to frame_budget");
    return CountPolicy{b["batch_size"].get<std::size_t>()};
  }
  FrameBudgetPolicy p{b["frame_budget"].get<Length>(), BudgetMode::kPadded};
  if (b.contains("mode"))
    p.mode = parse_budget_mode(b["mode"].get<std::string>());
  return p;
}

ojson policy_to_json(const BatchPolicy& policy) {
  ojson j;
  if (const auto* c = std::get_if<CountPolicy>(&policy)) {
    j["batch_size"] = c->batch_size;
  } else {
    const auto& f = std::get<FrameBudgetPolicy>(policy);
    j["frame_budget"] = f.budget;
    j["mode"] = std::string(to_string(f.mode));
  }
  return j;
}

void RunConfig::validate() const {
  if (strategies.empty()) throw ConfigError("at least one strategy is required");
  if (seeds.empty()) throw ConfigError("at least one seed is required");
  if (epochs < 1) throw ConfigError("epochs must be >= 1");
  if (chunk_size && *chunk_size < 1) throw ConfigError("chunk_size must be >= 1");
  if (const auto* s = std::get_if<SyntheticSource>(&corpus))
    seqbatch::validate(s->spec);
  if (const auto* count = std::get_if<CountPolicy>(&batching);
      count && count->batch_size < 1)
    throw ConfigError("batch_size must be >= 1");
  if (const auto* frame = std::get_if<FrameBudgetPolicy>(&batching);
      frame && frame->budget < 1)
    throw ConfigError("frame_budget must be >= 1");
  for (const StrategyConfig& s : strategies) {
    if (const auto* alt = std::get_if<AlternatedParams>(&s.params);
        alt && alt->n_bins < 1)
      throw ConfigError(s.name() + ": bins must be >= 1");
    if (const auto* b = std::get_if<BucketingParams>(&s.params)) {
      if (b->width.has_value() == !b->boundaries.empty())
        throw ConfigError(s.name() + ": give either a width or boundaries");
      if (b->width && *b->width < 1)
        throw ConfigError(s.name() + ": width must be >= 1");
    }
  }
  cost_model.validate();
}

RunConfig demo_config() {
  RunConfig cfg;
  cfg.corpus = SyntheticSource{
      SyntheticSpec{1000, LognormalLengths{5.3, 0.6}, std::nullopt}, 0};
  cfg.strategies = {
      StrategyConfig{RandomParams{}, ""},
      StrategyConfig{SortedParams{}, ""},
      StrategyConfig{BucketingParams{250, {}, BucketSelection::kWeighted}, ""},
      StrategyConfig{AlternatedParams{8}, ""},
      StrategyConfig{AlternatedParams{64}, ""},
      StrategyConfig{AlternatedParams{256}, ""},
  };
  cfg.batching = FrameBudgetPolicy{5000, BudgetMode::kPadded};
  cfg.seeds = parse_seed_range("1..10");
  cfg.epochs = 1;
  cfg.out = "out";
  return cfg;
}

RunConfig parse_config(std::string_view json_text,
                       const std::filesystem::path& base_dir) {
  RunConfig cfg = demo_config();
  try {
    apply_json(cfg, json::parse(json_text), base_dir);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config(text.str(), path.parent_path());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

StrategyConfig parse_strategy(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  // Bare value -> primary parameter; otherwise key=value pairs.
  std::vector<std::pair<std::string_view, std::string_view>> kv;
  if (!params.empty()) {
    for (std::string_view item : split(params, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos)
        kv.emplace_back(std::string_view{}, item);
      else
        kv.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
  }
  const auto bad = [&](std::string_view key) {
    return ConfigError("strategy \"" + std::string(text) +
                       "\": unexpected parameter \"" + std::string(key) + "\"");
  };

  StrategyConfig s;
  if (name == "random") {
    if (!kv.empty()) throw bad(kv.front().second);
    s.params = RandomParams{};
  } else if (name == "sorted") {
    SortedParams p;
    for (auto [k, v] : kv) {
      if (k.empty() || k == "direction") p.direction = parse_direction(v);
      else throw bad(k);
    }
    s.params = p;
  } else if (name == "bucketing") {
    BucketingParams p;
    for (auto [k, v] : kv) {
      if (k.empty() || k == "width") {
        p.width = parse_number<Length>(v, "bucket width");
      } else if (k == "bounds" || k == "boundaries") {
        for (std::string_view b : split(v, '/'))
          p.boundaries.push_back(parse_number<Length>(b, "bucket boundary"));
      } else if (k == "select" || k == "selection") {
        p.selection = parse_selection(v);
      } else {
        throw bad(k);
      }
    }
    if (!p.width && p.boundaries.empty()) p.width = 250;
    s.params = p;
  } else if (name == "alternated") {
    AlternatedParams p{0};
    for (auto [k, v] : kv) {
      if (k.empty() || k == "bins") p.n_bins = parse_number<std::size_t>(v, "bin count");
      else throw bad(k);
    }
    if (p.n_bins == 0)
      throw ConfigError("strategy \"" + std::string(text) +
                        "\": needs a bin count >= 1, e.g. alternated:64");
    s.params = p;
  } else {
    throw ConfigError("unknown strategy \"" + std::string(name) + "\"");
  }
  return s;
}

std::vector<std::uint64_t> parse_seed_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos)
    return {parse_number<std::uint64_t>(text, "seed")};
  const auto lo = parse_number<std::uint64_t>(text.substr(0, dots), "seed");
  const auto hi = parse_number<std::uint64_t>(text.substr(dots + 2), "seed");
  if (hi < lo) throw ConfigError("empty seed range \"" + std::string(text) + "\"");
  if (hi - lo >= 10'000'000)
    throw ConfigError("seed range \"" + std::string(text) + "\" is too large");
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = lo;; ++s) {
    seeds.push_back(s);
    if (s == hi) break;
  }
  return seeds;
}

LengthDistribution parse_distribution(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ConfigError("distribution \"" + std::string(text) +
                      "\" needs parameters, e.g. lognormal:5.3,0.6");
  const std::string_view type = text.substr(0, colon);
  std::vector<double> v;
  for (std::string_view p : split(text.substr(colon + 1), ','))
    v.push_back(parse_number<double>(p, "distribution parameter"));
  const auto expect = [&](std::size_t n) {
    if (v.size() != n)
      throw ConfigError("distribution \"" + std::string(text) + "\" takes " +
                        std::to_string(n) + " parameters");
  };
  if (type == "uniform") {
    expect(2);
    if (v[0] != std::floor(v[0]) || v[1] != std::floor(v[1]))
      throw ConfigError("uniform bounds must be integers");
    return UniformLengths{static_cast<Length>(v[0]), static_cast<Length>(v[1])};
  }
  if (type == "lognormal") {
    expect(2);
    return LognormalLengths{v[0], v[1]};
  }
  if (type == "bimodal") {
    expect(5);
    return BimodalLengths{{v[0], v[1]}, {v[2], v[3]}, v[4]};
  }
  throw ConfigError("unknown distribution \"" + std::string(type) + "\"");
}

Corpus resolve_corpus(const RunConfig& config) {
  Corpus corpus = std::visit(
      [](const auto& src) -> Corpus {
        using S = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<S, SyntheticSource>) {
          return generate_synthetic(src.spec, src.seed);
        } else {
          if (!std::filesystem::exists(src))
            throw ConfigError("manifest " + src.string() + " does not exist");
          return load_manifest(src);
        }
      },
      config.corpus);
  if (config.chunk_size) corpus = chunk_corpus(corpus, *config.chunk_size);
  return corpus;
}

}  // namespace seqbatch::cli
