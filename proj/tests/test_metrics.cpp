// test_metrics.cpp

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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "seqbatch/batching.hpp"
#include "seqbatch/errors.hpp"
#include "seqbatch/metrics.hpp"
#include "seqbatch/scheduling.hpp"
#include "test_util.hpp"

using namespace seqbatch;

namespace {

EpochPlan plan_from_groups(const std::vector<std::vector<std::size_t>>& groups,
                           const Corpus& c) {
  EpochPlan p;
  for (const auto& g : groups) p.batches.emplace_back(g, c);
  return p;
}

struct BruteMetrics {
  Length real = 0, padded = 0, max_padded = 0;
  double padding_ratio = 0, intra = 0;
  long double inter = 0;
};

// Independent recomputation. Variances come from pairwise differences, which
// avoids the sum / sum-of-squares route taken by the library.
BruteMetrics brute(const std::vector<std::vector<Length>>& batches) {
  BruteMetrics m;
  double intra_sum = 0;
  for (const auto& b : batches) {
    const Length mx = *std::max_element(b.begin(), b.end());
    const Length sum = std::accumulate(b.begin(), b.end(), Length{0});
    const auto n = static_cast<Length>(b.size());
    m.real += sum;
    m.padded += mx * n;
    m.max_padded = std::max(m.max_padded, mx * n);
    Length pair_sq = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        pair_sq += (b[i] - b[j]) * (b[i] - b[j]);
    intra_sum += std::sqrt(static_cast<double>(pair_sq) /
                           static_cast<double>(n * n));
  }
  m.padding_ratio = static_cast<double>(m.padded - m.real) /
                    static_cast<double>(m.padded);
  m.intra = intra_sum / static_cast<double>(batches.size());

  // Means s_i / n_i compared pairwise as exact cross products.
  long double acc = 0;
  const std::size_t nb = batches.size();
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = i + 1; j < nb; ++j) {
      const auto si = std::accumulate(batches[i].begin(), batches[i].end(), Length{0});
      const auto sj = std::accumulate(batches[j].begin(), batches[j].end(), Length{0});
      const auto ni = static_cast<Length>(batches[i].size());
      const auto nj = static_cast<Length>(batches[j].size());
      const Length cross = si * nj - sj * ni;
      acc += static_cast<long double>(cross * cross) /
             static_cast<long double>(ni * ni * nj * nj);
    }
  }
  m.inter = std::sqrt(acc) / static_cast<long double>(nb);
  return m;
}

void check_against_brute(const EpochPlan& plan, const Corpus& c) {
  std::vector<std::vector<Length>> groups;
  for (const Batch& b : plan.batches)
    groups.push_back(testing::lengths_of(c, b.members()));
  const BruteMetrics want = brute(groups);
  const MetricsReport got = evaluate(plan, c);
  CHECK(got.batch_count == plan.batches.size());
  CHECK(got.total_real_frames == want.real);
  CHECK(got.total_padded_frames == want.padded);
  CHECK(got.max_batch_padded_frames == want.max_padded);
  CHECK(got.padding_ratio == want.padding_ratio);
  CHECK(got.mean_intra_batch_std == want.intra);
  CHECK(std::abs(got.inter_batch_std - static_cast<double>(want.inter)) <= 1e-12);
}

double kahan_mean(const std::vector<double>& v) {
  double sum = 0.0, c = 0.0;
  for (double x : v) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum / static_cast<double>(v.size());
}

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t k = 0; k < order.size(); ++k) r[order[k]] = static_cast<double>(k + 1);
  return r;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = ranks(x), ry = ranks(y);
  const double n = static_cast<double>(x.size());
  double d2 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d2 += (rx[i] - ry[i]) * (rx[i] - ry[i]);
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

}  // namespace

TEST_CASE("evaluate: two-member batch") {
  const Corpus c = Corpus::from_lengths({3, 5});
  const MetricsReport r = evaluate(plan_from_groups({{0, 1}}, c), c);
  CHECK(r.total_padded_frames == 10);
  CHECK(r.total_real_frames == 8);
  CHECK(r.padding_ratio == doctest::Approx(0.2));
  CHECK(r.mean_intra_batch_std == 1.0);
  CHECK(r.inter_batch_std == 0.0);
  CHECK(r.batch_count == 1);
  CHECK(r.max_batch_padded_frames == 10);
}

TEST_CASE("evaluate: equal lengths give no padding and no spread") {
  const Corpus c = Corpus::from_lengths(std::vector<Length>(30, 17));
  for (std::size_t bs : {1u, 4u, 7u, 30u}) {
    const MetricsReport r = evaluate(batch_by_count(plan_random(c, bs, 0), c, bs), c);
    CHECK(r.padding_ratio == 0.0);
    CHECK(r.mean_intra_batch_std == 0.0);
    CHECK(r.inter_batch_std == 0.0);
  }
}

TEST_CASE("evaluate rejects plans that do not cover the corpus") {
  const Corpus c = Corpus::from_lengths({1, 2, 3});
  CHECK_THROWS_AS(evaluate(plan_from_groups({{0, 1}}, c), c), PlanError);
  CHECK_THROWS_AS(evaluate(plan_from_groups({{0, 1}, {1, 2}}, c), c), PlanError);
}

TEST_CASE("population_std") {
  const std::vector<Length> v = {2, 4, 4, 4, 5, 5, 7, 9};
  CHECK(population_std(v) == 2.0);
  CHECK(population_std(std::vector<Length>{42}) == 0.0);
  CHECK(population_std(std::vector<Length>{}) == 0.0);
  const std::vector<Length> big = {1'000'000'000'000LL, 1'000'000'000'002LL};
  CHECK(population_std(big) == 1.0);
}

TEST_CASE("evaluate agrees with a brute-force oracle on every small composition") {
  // All length tuples in 1..4 for sizes up to 4, every contiguous split.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Length> lengths(n, 1);
    while (true) {
      const Corpus c = Corpus::from_lengths(lengths);
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<std::vector<std::size_t>> groups(1);
        for (std::size_t i = 0; i < n; ++i) {
          if (i > 0 && (mask >> (i - 1)) & 1u) groups.emplace_back();
          groups.back().push_back(i);
        }
        check_against_brute(plan_from_groups(groups, c), c);
      }
      std::size_t k = 0;
      while (k < n && lengths[k] == 4) lengths[k++] = 1;
      if (k == n) break;
      ++lengths[k];
    }
  }
}

TEST_CASE("evaluate agrees with the oracle on random plans") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Corpus c = testing::random_corpus(gen, 1 + gen() % 200, 2000);
    const EpochPlan plan =
        batch_by_count(plan_random(c, gen(), 0), c, 1 + gen() % 20);
    check_against_brute(plan, c);
  }
}

TEST_CASE("aggregate: singleton and identical reports") {
  MetricsReport r;
  r.batch_count = 4;
  r.total_real_frames = 90;
  r.total_padded_frames = 100;
  r.padding_ratio = 0.1;
  r.mean_intra_batch_std = 2.5;
  r.inter_batch_std = 1.25;
  r.max_batch_padded_frames = 40;
  const std::vector<MetricsReport> one = {r};
  const MetricsSummary s1 = aggregate(one);
  CHECK(s1.count == 1);
  const auto values = metric_values(r);
  for (std::size_t f = 0; f < kMetricsFields.size(); ++f) {
    CHECK(s1.fields[f].mean == values[f]);
    CHECK(s1.fields[f].std == 0.0);
    CHECK(s1.fields[f].min == values[f]);
    CHECK(s1.fields[f].max == values[f]);
  }
  const std::vector<MetricsReport> two = {r, r};
  const MetricsSummary s2 = aggregate(two);
  for (const FieldStats& f : s2.fields) CHECK(f.std == 0.0);
  CHECK(s2["padding_ratio"].mean == 0.1);
  CHECK_THROWS(s2["nope"]);
  CHECK_THROWS_AS(aggregate(std::vector<MetricsReport>{}), ConfigError);
}

TEST_CASE("aggregate: mean of 100 padding ratios matches a compensated sum") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> u(0.0, 0.9);
  std::vector<MetricsReport> reports(100);
  std::vector<double> ratios;
  for (auto& r : reports) {
    r.padding_ratio = u(gen);
    ratios.push_back(r.padding_ratio);
  }
  const double want = kahan_mean(ratios);
  const MetricsSummary s = aggregate(reports);
  CHECK(std::abs(s["padding_ratio"].mean - want) <= 1e-12 * want);
  CHECK(s["padding_ratio"].min == *std::min_element(ratios.begin(), ratios.end()));
  CHECK(s["padding_ratio"].max == *std::max_element(ratios.begin(), ratios.end()));
  double sq = 0;
  for (double x : ratios) sq += (x - want) * (x - want);
  CHECK(s["padding_ratio"].std == doctest::Approx(std::sqrt(sq / 100)).epsilon(1e-12));
}

TEST_CASE("property: batch reordering leaves totals and inter-batch std unchanged") {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Corpus c = testing::random_corpus(gen, 2 + gen() % 300, 1500);
    EpochPlan plan = batch_by_count(plan_random(c, trial, 0), c, 1 + gen() % 16);
    const MetricsReport a = evaluate(plan, c);
    std::shuffle(plan.batches.begin(), plan.batches.end(), gen);
    const MetricsReport b = evaluate(plan, c);
    CHECK(a.batch_count == b.batch_count);
    CHECK(a.total_real_frames == b.total_real_frames);
    CHECK(a.total_padded_frames == b.total_padded_frames);
    CHECK(a.max_batch_padded_frames == b.max_batch_padded_frames);
    CHECK(a.padding_ratio == b.padding_ratio);
    CHECK(a.inter_batch_std == doctest::Approx(b.inter_batch_std).epsilon(1e-12));
    CHECK(a.mean_intra_batch_std == doctest::Approx(b.mean_intra_batch_std).epsilon(1e-12));
  }
}

TEST_CASE("property: sorted pads no more than random on lognormal corpora") {
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Corpus c =
        generate_synthetic({1000, LognormalLengths{5.3, 0.6}, std::nullopt}, seed);
    const double sorted =
        evaluate(batch_by_count(plan_sorted(c, SortDirection::kAscending), c, 16), c)
            .padding_ratio;
    const double random =
        evaluate(batch_by_count(plan_random(c, seed, 0), c, 16), c).padding_ratio;
    wins += sorted <= random;
  }
  CHECK(wins >= 95);
}

TEST_CASE("property: alternated trend over bin counts") {
  // More bins moves the plan toward random: both padding and the in-batch
  // spread grow with N.
  const Corpus c =
      generate_synthetic({1000, LognormalLengths{5.3, 0.6}, std::nullopt}, 0);
  const std::vector<double> bins = {1, 8, 64, 256};
  std::vector<double> padding, intra;
  for (double n : bins) {
    double p = 0, s = 0;
    const StrategyConfig strat{AlternatedParams{static_cast<std::size_t>(n)}, ""};
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const MetricsReport r = evaluate(
          plan_epoch(c, strat, FrameBudgetPolicy{5000, BudgetMode::kPadded}, seed, 0),
          c);
      p += r.padding_ratio;
      s += r.mean_intra_batch_std;
    }
    padding.push_back(p / 20);
    intra.push_back(s / 20);
  }
  CHECK(spearman(bins, padding) == 1.0);
  CHECK(spearman(bins, intra) == 1.0);
}
