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

#include "vrb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vrb/error.hpp"

namespace vrb {
namespace {

constexpr double kWeightSumTolerance = 1e-9;

// Level populations. The aggregated metrics are only reproducible when the
// clean level participates everywhere except the difference sum, which
// averages the five corrupted levels against the clean baseline.
constexpr int kAllLevels = EvaluationGrid::kLevels;  // 0..5
constexpr int kCorruptedLevels = kAllLevels - 1;     // 1..5

}  // namespace

const std::array<std::string, kSubMetricCount>& sub_metric_names() {
  static const std::array<std::string, kSubMetricCount> names = {
      "first_drop", "range", "error_rate", "avg_error", "adce"};
  return names;
}

int sub_metric_from_name(const std::string& name) {
  static const std::array<std::string, kSubMetricCount> aliases = {
      "f", "r", "rho", "mu", "delta"};
  for (int i = 0; i < kSubMetricCount; ++i) {
    if (name == sub_metric_names()[i] || name == aliases[i]) return i;
  }
  return -1;
}

SubMetricSet compute_sub_metrics(const EvaluationGrid& grid) {
  const int V = grid.model_count();
  const int C = grid.corruption_count();
  SubMetricSet out;
  out.metrics.assign(kSubMetricCount, MetricMatrix(V, C));

  for (int v = 0; v < V; ++v) {
    for (int c = 0; c < C; ++c) {
      const double e0 = grid.error(v, c, 0);

      // first drop: relative error change at the lightest severity
      {
        MetricValue& cell = out[kFirstDrop].at(v, c);
        const double e1 = grid.error(v, c, 1);
        if (e0 == 0.0) {
          cell.defined = e1 == 0.0;
          cell.value = 0.0;
        } else {
          cell.value = (e1 - e0) / e0;
        }
      }

      // range of error: true max/min scan, not the endpoints
      {
        MetricValue& cell = out[kRange].at(v, c);
        double lo = grid.error(v, c, 0);
        double hi = lo;
        for (int l = 1; l < kAllLevels; ++l) {
          lo = std::min(lo, grid.error(v, c, l));
          hi = std::max(hi, grid.error(v, c, l));
        }
        if (lo == 0.0) {
          cell.defined = false;
          cell.value = 0.0;
        } else {
          cell.value = (hi - lo) / lo;
        }
      }

      // error rate: ordinary least-squares slope of error vs. level
      {
        double sum_l = 0.0, sum_e = 0.0, sum_le = 0.0, sum_ll = 0.0;
        for (int l = 0; l < kAllLevels; ++l) {
          const double e = grid.error(v, c, l);
          sum_l += l;
          sum_e += e;
          sum_le += l * e;
          sum_ll += static_cast<double>(l) * l;
        }
        const double n = kAllLevels;
        out[kErrorRate].at(v, c).value =
            (n * sum_le - sum_l * sum_e) / (n * sum_ll - sum_l * sum_l);
      }

      // average error, derived from the accuracy mean so that
      // avg_error + avg_accuracy == 1 holds exactly
      {
        double acc_sum = 0.0;
        for (int l = 0; l < kAllLevels; ++l) acc_sum += grid.accuracy(v, c, l);
        out[kAvgError].at(v, c).value = 1.0 - acc_sum / kAllLevels;
      }

      // mean excess error over the clean baseline
      {
        double sum = 0.0;
        for (int l = 1; l < kAllLevels; ++l) sum += grid.error(v, c, l) - e0;
        out[kAdce].at(v, c).value = sum / kCorruptedLevels;
      }
    }
  }
  return out;
}

SubMetricSet min_max_scale(const SubMetricSet& raw,
                           std::vector<std::string>* warnings) {
  SubMetricSet out = raw;
  for (int m = 0; m < kSubMetricCount; ++m) {
    const MetricMatrix& src = raw[m];
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    int defined = 0;
    for (int v = 0; v < src.model_count(); ++v) {
      for (int c = 0; c < src.corruption_count(); ++c) {
        const MetricValue& cell = src.at(v, c);
        if (!cell.defined) continue;
        lo = std::min(lo, cell.value);
        hi = std::max(hi, cell.value);
        ++defined;
      }
    }
    const bool degenerate = defined > 0 && hi == lo;
    if (degenerate && warnings != nullptr) {
      warnings->push_back("sub-metric '" + sub_metric_names()[m] +
                          "' is constant across the run; scaled values set to 0");
    }
    for (int v = 0; v < src.model_count(); ++v) {
      for (int c = 0; c < src.corruption_count(); ++c) {
        MetricValue& cell = out[m].at(v, c);
        if (!cell.defined) continue;
        cell.value = degenerate ? 0.0 : (cell.value - lo) / (hi - lo);
      }
    }
  }
  return out;
}

WeightVector WeightVector::equal() {
  WeightVector w;
  w.w_.fill(1.0 / kSubMetricCount);
  return w;
}

WeightVector WeightVector::from_weights(const std::vector<double>& w) {
  if (w.size() != kSubMetricCount) {
    throw Error("expected " + std::to_string(kSubMetricCount) + " weights");
  }
  double sum = 0.0;
  for (double x : w) {
    if (!std::isfinite(x)) throw Error("weights must be finite");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw Error("weights must sum to 1 (got " + std::to_string(sum) + ")");
  }
  WeightVector out;
  std::copy(w.begin(), w.end(), out.w_.begin());
  return out;
}

WeightVector WeightVector::softmax(const std::vector<double>& preferences) {
  if (preferences.size() != kSubMetricCount) {
    throw Error("expected " + std::to_string(kSubMetricCount) +
                " preference scores");
  }
  double max_p = -std::numeric_limits<double>::infinity();
  for (double p : preferences) {
    if (!std::isfinite(p)) throw Error("preference scores must be finite");
    max_p = std::max(max_p, p);
  }
  WeightVector out;
  double sum = 0.0;
  for (int i = 0; i < kSubMetricCount; ++i) {
    out.w_[i] = std::exp(preferences[i] - max_p);
    sum += out.w_[i];
  }
  for (double& w : out.w_) w /= sum;
  return out;
}

namespace {

AggregateValue aggregate_line(const MetricMatrix& m, int fixed, bool fix_model) {
  AggregateValue out;
  double sum = 0.0;
  int count = 0;
  const int n = fix_model ? m.corruption_count() : m.model_count();
  for (int i = 0; i < n; ++i) {
    const MetricValue& cell = fix_model ? m.at(fixed, i) : m.at(i, fixed);
    if (!cell.defined) {
      ++out.skipped;
      continue;
    }
    sum += cell.value;
    ++count;
  }
  if (count == 0) {
    out.defined = false;
    out.value = 0.0;
  } else {
    out.value = sum / count;
  }
  return out;
}

}  // namespace

std::vector<AggregateValue> aggregate_over_corruptions(const MetricMatrix& m) {
  std::vector<AggregateValue> out;
  out.reserve(m.model_count());
  for (int v = 0; v < m.model_count(); ++v) {
    out.push_back(aggregate_line(m, v, /*fix_model=*/true));
  }
  return out;
}

std::vector<AggregateValue> aggregate_over_models(const MetricMatrix& m) {
  std::vector<AggregateValue> out;
  out.reserve(m.corruption_count());
  for (int c = 0; c < m.corruption_count(); ++c) {
    out.push_back(aggregate_line(m, c, /*fix_model=*/false));
  }
  return out;
}

AccuracySummary compute_accuracy(const EvaluationGrid& grid) {
  const int V = grid.model_count();
  const int C = grid.corruption_count();
  AccuracySummary out;
  out.base.resize(V);
  out.avg.assign(V, std::vector<double>(C, 0.0));
  out.model_avg.resize(V);
  out.corruption_avg.assign(C, 0.0);
  out.rel.assign(V, std::vector<double>(C, 0.0));
  out.model_rel.resize(V);
  out.corruption_rel.assign(C, 0.0);

  for (int v = 0; v < V; ++v) {
    out.base[v] = grid.accuracy(v, 0, 0);
    if (out.base[v] <= 0.0) {
      throw Error("model '" + grid.models()[v] +
                  "' has zero base accuracy; relative drops are undefined");
    }
    double model_sum = 0.0;
    for (int c = 0; c < C; ++c) {
      double sum = 0.0;
      for (int l = 0; l < EvaluationGrid::kLevels; ++l) {
        sum += grid.accuracy(v, c, l);
      }
      out.avg[v][c] = sum / EvaluationGrid::kLevels;
      out.rel[v][c] = (out.base[v] - out.avg[v][c]) / out.base[v];
      model_sum += out.avg[v][c];
    }
    out.model_avg[v] = model_sum / C;
    out.model_rel[v] = (out.base[v] - out.model_avg[v]) / out.base[v];
  }

  double base_sum = 0.0;
  for (int v = 0; v < V; ++v) base_sum += out.base[v];
  for (int c = 0; c < C; ++c) {
    double acc_sum = 0.0;
    double drop_sum = 0.0;
    for (int v = 0; v < V; ++v) {
      acc_sum += out.avg[v][c];
      drop_sum += out.base[v] - out.avg[v][c];
    }
    out.corruption_avg[c] = acc_sum / V;
    out.corruption_rel[c] = drop_sum / base_sum;
  }
  return out;
}

MetricReport compute_report(const EvaluationGrid& grid, const WeightVector& w) {
  grid.validate();

  MetricReport report;
  report.models = grid.models();
  report.corruptions = grid.corruptions();
  report.weights = w.values();
  report.accuracy = compute_accuracy(grid);
  report.raw = compute_sub_metrics(grid);
  report.scaled = min_max_scale(report.raw, &report.warnings);

  for (int m = 0; m < kSubMetricCount; ++m) {
    report.model_raw[m] = aggregate_over_corruptions(report.raw[m]);
    report.model_scaled[m] = aggregate_over_corruptions(report.scaled[m]);
    report.corruption_raw[m] = aggregate_over_models(report.raw[m]);
    report.corruption_scaled[m] = aggregate_over_models(report.scaled[m]);
  }

  const int V = grid.model_count();
  const int C = grid.corruption_count();
  report.vre_model.assign(V, 0.0);
  report.vre_corruption.assign(C, 0.0);
  for (int v = 0; v < V; ++v) {
    double vre = 0.0;
    bool defined = true;
    for (int m = 0; m < kSubMetricCount; ++m) {
      const AggregateValue& agg = report.model_scaled[m][v];
      defined = defined && agg.defined;
      vre += w[m] * agg.value;
    }
    if (!defined) {
      report.warnings.push_back("VRE undefined for model '" +
                                report.models[v] + "'");
      vre = std::numeric_limits<double>::quiet_NaN();
    }
    report.vre_model[v] = vre;
  }
  for (int c = 0; c < C; ++c) {
    double vre = 0.0;
    bool defined = true;
    for (int m = 0; m < kSubMetricCount; ++m) {
      const AggregateValue& agg = report.corruption_scaled[m][c];
      defined = defined && agg.defined;
      vre += w[m] * agg.value;
    }
    if (!defined) {
      report.warnings.push_back("VRE undefined for corruption '" +
                                report.corruptions[c] + "'");
      vre = std::numeric_limits<double>::quiet_NaN();
    }
    report.vre_corruption[c] = vre;
  }
  return report;
}

}  // namespace vrb
