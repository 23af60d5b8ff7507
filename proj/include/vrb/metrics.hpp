// Copyright 2026 The vrb Authors
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

#pragma once

#include <array>
#include <string>
#include <vector>

#include "vrb/grid.hpp"

namespace vrb {

// The five severity-aggregated error sub-metrics, in weight-vector order.
enum SubMetric : int {
  kFirstDrop = 0,   // relative error increase from level 0 to level 1
  kRange = 1,       // (max - min) / min over levels 0..5
  kErrorRate = 2,   // least-squares slope of error vs. level over 0..5
  kAvgError = 3,    // mean error over levels 0..5
  kAdce = 4,        // mean excess over clean error across levels 1..5
};
constexpr int kSubMetricCount = 5;

const std::array<std::string, kSubMetricCount>& sub_metric_names();
/// Accepts canonical names and the short aliases f, r, rho, mu, delta.
int sub_metric_from_name(const std::string& name);  // -1 if unknown

/// A per-(model, corruption) value; first-drop and range are undefined
/// when the clean error is zero, and aggregation skips such cells.
struct MetricValue {
  double value = 0.0;
  bool defined = true;
};

class MetricMatrix {
 public:
  MetricMatrix(int models, int corruptions)
      : models_(models), corruptions_(corruptions),
        cells_(static_cast<std::size_t>(models) * corruptions) {}

  int model_count() const { return models_; }
  int corruption_count() const { return corruptions_; }

  MetricValue& at(int v, int c) {
    return cells_[static_cast<std::size_t>(v) * corruptions_ + c];
  }
  const MetricValue& at(int v, int c) const {
    return cells_[static_cast<std::size_t>(v) * corruptions_ + c];
  }

 private:
  int models_;
  int corruptions_;
  std::vector<MetricValue> cells_;
};

struct SubMetricSet {
  std::vector<MetricMatrix> metrics;  // indexed by SubMetric
  const MetricMatrix& operator[](int m) const { return metrics[m]; }
  MetricMatrix& operator[](int m) { return metrics[m]; }
};

SubMetricSet compute_sub_metrics(const EvaluationGrid& grid);

/// Min-max scaling per sub-metric over all defined (model, corruption)
/// cells of this run. A degenerate population (max == min) scales to all
/// zeros and appends a warning.
SubMetricSet min_max_scale(const SubMetricSet& raw,
                           std::vector<std::string>* warnings = nullptr);

class WeightVector {
 public:
  static WeightVector equal();
  /// Explicit weights; must sum to 1 within 1e-9.
  static WeightVector from_weights(const std::vector<double>& w);
  /// softmax over preference scores; strictly positive, sums to 1.
  static WeightVector softmax(const std::vector<double>& preferences);

  double operator[](int m) const { return w_[m]; }
  const std::array<double, kSubMetricCount>& values() const { return w_; }

 private:
  WeightVector() = default;
  std::array<double, kSubMetricCount> w_{};
};

struct AggregateValue {
  double value = 0.0;
  bool defined = true;
  int skipped = 0;  // undefined cells excluded from the mean
};

std::vector<AggregateValue> aggregate_over_corruptions(const MetricMatrix& m);
std::vector<AggregateValue> aggregate_over_models(const MetricMatrix& m);

/// Accuracy-side metrics (averages over the six levels and relative drops).
struct AccuracySummary {
  std::vector<double> base;                    // A[v,0] per model
  std::vector<std::vector<double>> avg;        // A[v][c], levels averaged
  std::vector<double> model_avg;               // per model
  std::vector<double> corruption_avg;          // per corruption
  std::vector<std::vector<double>> rel;        // relative drop per (v,c)
  std::vector<double> model_rel;               // per model
  std::vector<double> corruption_rel;          // per corruption
};
AccuracySummary compute_accuracy(const EvaluationGrid& grid);

/// Everything the report command emits, computed at full precision.
struct MetricReport {
  std::vector<std::string> models;
  std::vector<std::string> corruptions;
  AccuracySummary accuracy;
  SubMetricSet raw;
  SubMetricSet scaled;
  // aggregate[metric][model or corruption]
  std::array<std::vector<AggregateValue>, kSubMetricCount> model_raw;
  std::array<std::vector<AggregateValue>, kSubMetricCount> model_scaled;
  std::array<std::vector<AggregateValue>, kSubMetricCount> corruption_raw;
  std::array<std::vector<AggregateValue>, kSubMetricCount> corruption_scaled;
  std::vector<double> vre_model;       // weighted scaled aggregates
  std::vector<double> vre_corruption;
  std::array<double, kSubMetricCount> weights{};
  std::vector<std::string> warnings;
};

MetricReport compute_report(const EvaluationGrid& grid, const WeightVector& w);

}  // namespace vrb
