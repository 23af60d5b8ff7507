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

#include <string>

#include "vrb/metrics.hpp"

namespace vrb {

// Report emission. CSV tables round to 3 decimals like the published
// tables; metric_report.json keeps full precision. All writes are
// write-then-rename.

/// Accuracy table: per-model A(v,c) columns plus base/average/relative
/// drop, then per-corruption average and relative drop footer rows.
std::string accuracy_report_csv(const MetricReport& report);

/// Sub-metric + VRE tables, one row per model / per corruption.
std::string model_metrics_csv(const MetricReport& report);
std::string corruption_metrics_csv(const MetricReport& report);

/// Full-precision structured report.
std::string metric_report_json(const MetricReport& report);

/// Writes the three CSV tables and the JSON report into out_dir, plus
/// plot-ready flat files under out_dir/plots (relative-drop heatmap,
/// average-error bars, per-level error trends, scaled sub-metric radar).
void write_report_files(const MetricReport& report, const EvaluationGrid& grid,
                        const std::string& out_dir);

}  // namespace vrb
