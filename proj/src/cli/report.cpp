// cli/report.cpp

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

#include "seqbatch/cli/report.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json_io.hpp"
#include "seqbatch/errors.hpp"

namespace seqbatch::cli {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <typename T>
T parse_field(const std::string& text, std::size_t line_no) {
  T value{};
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size())
    throw Error("report line " + std::to_string(line_no) + ": bad value \"" +
                text + "\"");
  return value;
}

void check_strategy_name(std::string_view name) {
  if (name.find_first_of(",\n\r\"") != std::string_view::npos)
    throw ConfigError("strategy label \"" + std::string(name) +
                      "\" cannot contain commas, quotes or line breaks");
}

}  // namespace

std::array<std::string_view, kNumericColumns> numeric_columns() {
  std::array<std::string_view, kNumericColumns> out{};
  std::size_t k = 0;
  for (auto f : kMetricsFields) out[k++] = f;
  for (auto f : kSimFields) out[k++] = f;
  return out;
}

std::array<double, kNumericColumns> numeric_values(const ReportRow& row) {
  std::array<double, kNumericColumns> out{};
  const auto m = metric_values(row.metrics);
  std::copy(m.begin(), m.end(), out.begin());
  out[m.size()] = row.sim.sim_time;
  out[m.size() + 1] = row.sim.utterances_per_time;
  out[m.size() + 2] = row.sim.peak_memory;
  return out;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::string report_csv_header() {
  std::string h = "strategy,seed,epoch";
  for (auto c : numeric_columns()) {
    h += ',';
    h += c;
  }
  return h;
}

std::string report_csv_line(const ReportRow& row) {
  check_strategy_name(row.strategy);
  const MetricsReport& m = row.metrics;
  std::string s = row.strategy;
  s += ',' + std::to_string(row.seed);
  s += ',' + std::to_string(row.epoch);
  s += ',' + std::to_string(m.batch_count);
  s += ',' + std::to_string(m.total_real_frames);
  s += ',' + std::to_string(m.total_padded_frames);
  s += ',' + format_real(m.padding_ratio);
  s += ',' + format_real(m.mean_intra_batch_std);
  s += ',' + format_real(m.inter_batch_std);
  s += ',' + std::to_string(m.max_batch_padded_frames);
  s += ',' + format_real(row.sim.sim_time);
  s += ',' + format_real(row.sim.utterances_per_time);
  s += ',' + format_real(row.sim.peak_memory);
  return s;
}

void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << report_csv_header() << '\n';
  for (const ReportRow& r : rows) out << report_csv_line(r) << '\n';
}

std::vector<ReportRow> read_report_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != report_csv_header())
    throw Error("report CSV: unexpected header");
  std::vector<ReportRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 3 + kNumericColumns)
      throw Error("report line " + std::to_string(line_no) + ": expected " +
                  std::to_string(3 + kNumericColumns) + " fields");
    ReportRow r;
    r.strategy = f[0];
    r.seed = parse_field<std::uint64_t>(f[1], line_no);
    r.epoch = parse_field<std::uint64_t>(f[2], line_no);
    r.metrics.batch_count = parse_field<std::size_t>(f[3], line_no);
    r.metrics.total_real_frames = parse_field<Length>(f[4], line_no);
    r.metrics.total_padded_frames = parse_field<Length>(f[5], line_no);
    r.metrics.padding_ratio = parse_field<double>(f[6], line_no);
    r.metrics.mean_intra_batch_std = parse_field<double>(f[7], line_no);
    r.metrics.inter_batch_std = parse_field<double>(f[8], line_no);
    r.metrics.max_batch_padded_frames = parse_field<Length>(f[9], line_no);
    r.sim.sim_time = parse_field<double>(f[10], line_no);
    r.sim.utterances_per_time = parse_field<double>(f[11], line_no);
    r.sim.peak_memory = parse_field<double>(f[12], line_no);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SummaryRow> summarize_rows(const std::vector<ReportRow>& rows) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const ReportRow*>> groups;
  for (const ReportRow& r : rows) {
    auto& g = groups[r.strategy];
    if (g.empty()) order.push_back(r.strategy);
    g.push_back(&r);
  }

  std::vector<SummaryRow> out;
  for (const std::string& name : order) {
    const auto& group = groups[name];
    std::vector<MetricsReport> metrics;
    for (const ReportRow* r : group) metrics.push_back(r->metrics);

    SummaryRow s;
    s.strategy = name;
    s.runs = group.size();
    const MetricsSummary ms = aggregate(metrics);
    std::copy(ms.fields.begin(), ms.fields.end(), s.fields.begin());
    std::vector<double> column(group.size());
    for (std::size_t k = 0; k < kSimFields.size(); ++k) {
      for (std::size_t i = 0; i < group.size(); ++i)
        column[i] = numeric_values(*group[i])[kMetricsFields.size() + k];
      s.fields[kMetricsFields.size() + k] = summarize(column);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "strategy,runs";
  for (auto c : numeric_columns()) out << ',' << c << "_mean," << c << "_std";
  out << '\n';
  for (const SummaryRow& s : rows) {
    out << s.strategy << ',' << s.runs;
    for (const FieldStats& f : s.fields)
      out << ',' << format_real(f.mean) << ',' << format_real(f.std);
    out << '\n';
  }
}

std::string compare_json(const std::vector<ReportRow>& rows,
                         const std::vector<SummaryRow>& summary) {
  const auto columns = numeric_columns();
  ojson root;
  root["rows"] = ojson::array();
  for (const ReportRow& r : rows) {
    ojson j;
    j["strategy"] = r.strategy;
    j["seed"] = r.seed;
    j["epoch"] = r.epoch;
    const auto values = numeric_values(r);
    for (std::size_t k = 0; k < columns.size(); ++k) {
      // Integer-valued metrics stay integers.
      if (k < kMetricsFields.size() && columns[k] != "padding_ratio" &&
          columns[k] != "mean_intra_batch_std" &&
          columns[k] != "inter_batch_std")
        j[std::string(columns[k])] = static_cast<std::int64_t>(values[k]);
      else
        j[std::string(columns[k])] = values[k];
    }
    root["rows"].push_back(std::move(j));
  }
  root["summary"] = ojson::array();
  for (const SummaryRow& s : summary) {
    ojson j;
    j["strategy"] = s.strategy;
    j["runs"] = s.runs;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      const FieldStats& f = s.fields[k];
      j[std::string(columns[k])] = {
          {"mean", f.mean}, {"std", f.std}, {"min", f.min}, {"max", f.max}};
    }
    root["summary"].push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

std::string plan_to_json(const EpochPlan& plan) {
  ojson config;
  config["strategy"] = strategy_to_json(plan.strategy);
  config["batching"] = policy_to_json(plan.policy);

  // One batch per line keeps large plans diffable.
  std::string s = "{\n";
  s += "  \"strategy\": " + ojson(plan.strategy.name()).dump() + ",\n";
  s += "  \"seed\": " + std::to_string(plan.seed) + ",\n";
  s += "  \"epoch\": " + std::to_string(plan.epoch) + ",\n";
  s += "  \"config\": " + config.dump() + ",\n";
  s += "  \"batches\": [";
  for (std::size_t b = 0; b < plan.batches.size(); ++b) {
    s += b == 0 ? "\n    " : ",\n    ";
    s += ojson(plan.batches[b].members()).dump();
  }
  s += plan.batches.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return s;
}

EpochPlan plan_from_json(std::string_view text, const Corpus& corpus) {
  try {
    const ojson j = ojson::parse(text);
    EpochPlan plan;
    plan.strategy = strategy_from_json(j.at("config").at("strategy"));
    plan.policy = policy_from_json(j.at("config").at("batching"));
    plan.seed = j.at("seed").get<std::uint64_t>();
    plan.epoch = j.at("epoch").get<std::uint64_t>();
    for (const ojson& b : j.at("batches"))
      plan.batches.emplace_back(b.get<std::vector<std::size_t>>(), corpus);
    return plan;
  } catch (const ojson::exception& e) {
    throw PlanError(std::string("plan JSON: ") + e.what());
  }
}

void write_trace_csv(std::ostream& out, const std::vector<TraceSeries>& series) {
  out << "strategy,position,length\n";
  for (const TraceSeries& s : series) {
    check_strategy_name(s.strategy);
    for (std::size_t i = 0; i < s.lengths.size(); ++i)
      out << s.strategy << ',' << i << ',' << s.lengths[i] << '\n';
  }
}

std::vector<TraceSeries> read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "strategy,position,length")
    throw Error("trace CSV: unexpected header");
  std::vector<TraceSeries> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 3)
      throw Error("trace line " + std::to_string(line_no) + ": expected 3 fields");
    if (out.empty() || out.back().strategy != f[0]) out.push_back({f[0], {}});
    const auto pos = parse_field<std::size_t>(f[1], line_no);
    if (pos != out.back().lengths.size())
      throw Error("trace line " + std::to_string(line_no) +
                  ": positions must be consecutive");
    out.back().lengths.push_back(parse_field<Length>(f[2], line_no));
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace seqbatch::cli
