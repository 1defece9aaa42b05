// Copyright 2026 The region_rrt Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Overlap metrics between binary masks, and aggregation of planner trials.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "region_rrt/error.hpp"
#include "region_rrt/map_model.hpp"

namespace region_rrt {

struct BinaryMask {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> bits;  // row-major, 0 or 1

  BinaryMask() = default;
  BinaryMask(std::size_t w, std::size_t h, std::vector<std::uint8_t> b)
      : width(w), height(h), bits(std::move(b)) {
    detail::require(width > 0 && height > 0, "BinaryMask: empty dimensions");
    detail::require(bits.size() == width * height, "BinaryMask: bit count mismatch");
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto b : bits) n += b ? 1 : 0;
    return n;
  }
};

inline BinaryMask binarize(const HeuristicMap& h, double threshold = 0.5) {
  detail::require(threshold > 0.0 && threshold < 1.0, "binarize: threshold must lie in (0,1)");
  std::vector<std::uint8_t> bits(h.weights().size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = h.weights()[i] >= threshold ? 1 : 0;
  return BinaryMask(h.width(), h.height(), std::move(bits));
}

struct Confusion {
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t false_negative = 0;
};

inline Confusion confusion(const BinaryMask& pred, const BinaryMask& gt) {
  detail::require(pred.width == gt.width && pred.height == gt.height,
                  "mask dimensions do not match");
  Confusion c;
  for (std::size_t i = 0; i < pred.bits.size(); ++i) {
    const bool p = pred.bits[i] != 0;
    const bool g = gt.bits[i] != 0;
    if (p && g) ++c.true_positive;
    else if (p) ++c.false_positive;
    else if (g) ++c.false_negative;
  }
  return c;
}

// TP / (TP + FN + FP); 1 when both masks are empty.
inline double iou(const BinaryMask& pred, const BinaryMask& gt) {
  const Confusion c = confusion(pred, gt);
  const std::size_t denom = c.true_positive + c.false_negative + c.false_positive;
  if (denom == 0) return 1.0;
  return static_cast<double>(c.true_positive) / static_cast<double>(denom);
}

// 2TP / (2TP + FN + FP); 1 when both masks are empty.
inline double dice(const BinaryMask& pred, const BinaryMask& gt) {
  const Confusion c = confusion(pred, gt);
  const std::size_t denom = 2 * c.true_positive + c.false_negative + c.false_positive;
  if (denom == 0) return 1.0;
  return static_cast<double>(2 * c.true_positive) / static_cast<double>(denom);
}

// ---------------------------------------------------------------------------
// Planner trials.

struct TrialRecord {
  std::string map_id;
  std::string algorithm;
  std::uint64_t seed = 0;
  bool success = false;
  double time_cost = 0.0;
  std::size_t node_count = 0;
  std::size_t iterations = 0;
  double path_cost = 0.0;  // meaningful only when success
};

// Time and node statistics are over all trials of the group; path cost is
// over successful trials only (NaN if there are none).
struct SummaryRow {
  std::string map_id;
  std::string algorithm;
  std::size_t trials = 0;
  double success_rate = 0.0;
  double median_time = 0.0;
  double mean_time = 0.0;
  double median_nodes = 0.0;
  double mean_nodes = 0.0;
  double median_path_cost = std::numeric_limits<double>::quiet_NaN();
};

inline double median(std::vector<double> values) {
  detail::require(!values.empty(), "median of empty set");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

inline double mean(const std::vector<double>& values) {
  detail::require(!values.empty(), "mean of empty set");
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// Groups ordered by (map id, algorithm), lexicographically.
inline std::vector<SummaryRow> aggregate(const std::vector<TrialRecord>& records) {
  detail::require(!records.empty(), "aggregate: no records");
  std::map<std::pair<std::string, std::string>, std::vector<const TrialRecord*>> groups;
  for (const auto& r : records) groups[{r.map_id, r.algorithm}].push_back(&r);

  std::vector<SummaryRow> rows;
  for (const auto& [key, members] : groups) {
    SummaryRow row;
    row.map_id = key.first;
    row.algorithm = key.second;
    row.trials = members.size();
    std::vector<double> times, nodes, costs;
    std::size_t successes = 0;
    for (const TrialRecord* r : members) {
      times.push_back(r->time_cost);
      nodes.push_back(static_cast<double>(r->node_count));
      if (r->success) {
        ++successes;
        costs.push_back(r->path_cost);
      }
    }
    row.success_rate = static_cast<double>(successes) / static_cast<double>(members.size());
    row.median_time = median(times);
    row.mean_time = mean(times);
    row.median_nodes = median(nodes);
    row.mean_nodes = mean(nodes);
    if (!costs.empty()) row.median_path_cost = median(costs);
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// CSV (UTF-8, LF).

inline std::string format_real(double v, int precision = 9) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

inline constexpr const char* kTrialCsvHeader =
    "map_id,algorithm,seed,success,time_s,node_count,iterations,path_cost";

inline constexpr const char* kSummaryCsvHeader =
    "map_id,algorithm,trials,success_rate,median_time_s,mean_time_s,median_nodes,mean_nodes,"
    "median_path_cost";

inline std::string trial_csv_row(const TrialRecord& r) {
  return r.map_id + "," + r.algorithm + "," + std::to_string(r.seed) + "," +
         (r.success ? "true" : "false") + "," + format_real(r.time_cost, 6) + "," +
         std::to_string(r.node_count) + "," + std::to_string(r.iterations) + "," +
         (r.success ? format_real(r.path_cost, 12) : std::string("nan"));
}

inline void write_trial_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << kTrialCsvHeader << '\n';
  for (const auto& r : records) out << trial_csv_row(r) << '\n';
}

inline void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << kSummaryCsvHeader << '\n';
  for (const auto& s : rows) {
    out << s.map_id << ',' << s.algorithm << ',' << s.trials << ',' << format_real(s.success_rate)
        << ',' << format_real(s.median_time, 6) << ',' << format_real(s.mean_time, 6) << ','
        << format_real(s.median_nodes) << ',' << format_real(s.mean_nodes) << ','
        << format_real(s.median_path_cost, 12) << '\n';
  }
}

}  // namespace region_rrt
