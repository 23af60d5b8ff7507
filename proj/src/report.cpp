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

#include "vrb/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "vrb/imageio.hpp"

namespace vrb {
namespace {

using nlohmann::json;

std::string fmt3(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json aggregate_json(const AggregateValue& a) {
  json j;
  j["value"] = a.defined ? json(a.value) : json();
  if (a.skipped > 0) j["skipped_cells"] = a.skipped;
  return j;
}

json matrix_json(const MetricMatrix& m, const std::vector<std::string>& models,
                 const std::vector<std::string>& corruptions) {
  json j = json::object();
  for (int v = 0; v < m.model_count(); ++v) {
    json row = json::object();
    for (int c = 0; c < m.corruption_count(); ++c) {
      const MetricValue& cell = m.at(v, c);
      row[corruptions[c]] = cell.defined ? json(cell.value) : json();
    }
    j[models[v]] = std::move(row);
  }
  return j;
}

}  // namespace

std::string accuracy_report_csv(const MetricReport& report) {
  std::ostringstream out;
  out << "model";
  for (const std::string& c : report.corruptions) out << ',' << c;
  out << ",avg_accuracy,base_accuracy,relative_drop_pct\n";
  for (std::size_t v = 0; v < report.models.size(); ++v) {
    out << report.models[v];
    for (std::size_t c = 0; c < report.corruptions.size(); ++c) {
      out << ',' << fmt3(report.accuracy.avg[v][c]);
    }
    out << ',' << fmt3(report.accuracy.model_avg[v]) << ','
        << fmt3(report.accuracy.base[v]) << ','
        << fmt3(100.0 * report.accuracy.model_rel[v]) << '\n';
  }
  out << "corruption_avg";
  for (std::size_t c = 0; c < report.corruptions.size(); ++c) {
    out << ',' << fmt3(report.accuracy.corruption_avg[c]);
  }
  out << ",,,\n";
  out << "corruption_relative_drop_pct";
  for (std::size_t c = 0; c < report.corruptions.size(); ++c) {
    out << ',' << fmt3(100.0 * report.accuracy.corruption_rel[c]);
  }
  out << ",,,\n";
  return out.str();
}

namespace {

std::string metrics_table_csv(const MetricReport& report, bool per_model) {
  const auto& names = per_model ? report.models : report.corruptions;
  const auto& raw = per_model ? report.model_raw : report.corruption_raw;
  const auto& scaled = per_model ? report.model_scaled : report.corruption_scaled;
  const auto& vre = per_model ? report.vre_model : report.vre_corruption;

  std::ostringstream out;
  out << (per_model ? "model" : "corruption");
  if (per_model) out << ",base_accuracy,avg_accuracy,relative_drop";
  else out << ",avg_accuracy,relative_drop";
  for (const std::string& n : sub_metric_names()) out << ',' << n;
  for (const std::string& n : sub_metric_names()) out << ',' << n << "_scaled";
  out << ",vre\n";

  for (std::size_t i = 0; i < names.size(); ++i) {
    out << names[i];
    if (per_model) {
      out << ',' << fmt3(report.accuracy.base[i]) << ','
          << fmt3(report.accuracy.model_avg[i]) << ','
          << fmt3(report.accuracy.model_rel[i]);
    } else {
      out << ',' << fmt3(report.accuracy.corruption_avg[i]) << ','
          << fmt3(report.accuracy.corruption_rel[i]);
    }
    for (int m = 0; m < kSubMetricCount; ++m) {
      const AggregateValue& a = raw[m][i];
      out << ',' << (a.defined ? fmt3(a.value) : "undefined");
    }
    for (int m = 0; m < kSubMetricCount; ++m) {
      const AggregateValue& a = scaled[m][i];
      out << ',' << (a.defined ? fmt3(a.value) : "undefined");
    }
    out << ',' << fmt3(vre[i]) << '\n';
  }
  return out.str();
}

}  // namespace

std::string model_metrics_csv(const MetricReport& report) {
  return metrics_table_csv(report, /*per_model=*/true);
}

std::string corruption_metrics_csv(const MetricReport& report) {
  return metrics_table_csv(report, /*per_model=*/false);
}

std::string metric_report_json(const MetricReport& report) {
  json j;
  j["models"] = report.models;
  j["corruptions"] = report.corruptions;
  j["weights"] = json::object();
  for (int m = 0; m < kSubMetricCount; ++m) {
    j["weights"][sub_metric_names()[m]] = report.weights[m];
  }

  json acc;
  for (std::size_t v = 0; v < report.models.size(); ++v) {
    json row;
    row["base_accuracy"] = report.accuracy.base[v];
    row["avg_accuracy"] = report.accuracy.model_avg[v];
    row["relative_drop"] = report.accuracy.model_rel[v];
    json per_corruption = json::object();
    for (std::size_t c = 0; c < report.corruptions.size(); ++c) {
      per_corruption[report.corruptions[c]] = report.accuracy.avg[v][c];
    }
    row["avg_accuracy_per_corruption"] = std::move(per_corruption);
    acc[report.models[v]] = std::move(row);
  }
  j["accuracy_models"] = std::move(acc);

  json acc_c = json::object();
  for (std::size_t c = 0; c < report.corruptions.size(); ++c) {
    json row;
    row["avg_accuracy"] = report.accuracy.corruption_avg[c];
    row["relative_drop"] = report.accuracy.corruption_rel[c];
    acc_c[report.corruptions[c]] = std::move(row);
  }
  j["accuracy_corruptions"] = std::move(acc_c);

  for (int m = 0; m < kSubMetricCount; ++m) {
    const std::string& name = sub_metric_names()[m];
    j["sub_metrics"][name]["raw"] =
        matrix_json(report.raw[m], report.models, report.corruptions);
    j["sub_metrics"][name]["scaled"] =
        matrix_json(report.scaled[m], report.models, report.corruptions);
    json mr = json::object(), ms = json::object();
    for (std::size_t v = 0; v < report.models.size(); ++v) {
      mr[report.models[v]] = aggregate_json(report.model_raw[m][v]);
      ms[report.models[v]] = aggregate_json(report.model_scaled[m][v]);
    }
    json cr = json::object(), cs = json::object();
    for (std::size_t c = 0; c < report.corruptions.size(); ++c) {
      cr[report.corruptions[c]] = aggregate_json(report.corruption_raw[m][c]);
      cs[report.corruptions[c]] = aggregate_json(report.corruption_scaled[m][c]);
    }
    j["sub_metrics"][name]["model_raw"] = std::move(mr);
    j["sub_metrics"][name]["model_scaled"] = std::move(ms);
    j["sub_metrics"][name]["corruption_raw"] = std::move(cr);
    j["sub_metrics"][name]["corruption_scaled"] = std::move(cs);
  }

  json vre_m = json::object(), vre_c = json::object();
  for (std::size_t v = 0; v < report.models.size(); ++v) {
    vre_m[report.models[v]] =
        std::isnan(report.vre_model[v]) ? json() : json(report.vre_model[v]);
  }
  for (std::size_t c = 0; c < report.corruptions.size(); ++c) {
    vre_c[report.corruptions[c]] = std::isnan(report.vre_corruption[c])
                                       ? json()
                                       : json(report.vre_corruption[c]);
  }
  j["vre_models"] = std::move(vre_m);
  j["vre_corruptions"] = std::move(vre_c);
  j["warnings"] = report.warnings;
  return j.dump(2) + "\n";
}

void write_report_files(const MetricReport& report, const EvaluationGrid& grid,
                        const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(out_dir) / "plots");

  atomic_write_file((fs::path(out_dir) / "accuracy_report.csv").string(),
                    accuracy_report_csv(report));
  atomic_write_file((fs::path(out_dir) / "model_metrics.csv").string(),
                    model_metrics_csv(report));
  atomic_write_file((fs::path(out_dir) / "corruption_metrics.csv").string(),
                    corruption_metrics_csv(report));
  atomic_write_file((fs::path(out_dir) / "metric_report.json").string(),
                    metric_report_json(report));

  // heatmap of relative accuracy drop (percent)
  {
    std::ostringstream out;
    out << "model,corruption,relative_drop_pct\n";
    for (std::size_t v = 0; v < report.models.size(); ++v) {
      for (std::size_t c = 0; c < report.corruptions.size(); ++c) {
        out << report.models[v] << ',' << report.corruptions[c] << ','
            << fmt_full(100.0 * report.accuracy.rel[v][c]) << '\n';
      }
    }
    atomic_write_file(
        (fs::path(out_dir) / "plots" / "relative_drop_heatmap.csv").string(),
        out.str());
  }

  // grouped bars of average error per (model, corruption)
  {
    std::ostringstream out;
    out << "model,corruption,avg_error\n";
    for (std::size_t v = 0; v < report.models.size(); ++v) {
      for (std::size_t c = 0; c < report.corruptions.size(); ++c) {
        out << report.models[v] << ',' << report.corruptions[c] << ','
            << fmt_full(report.raw[kAvgError].at(static_cast<int>(v),
                                                 static_cast<int>(c)).value)
            << '\n';
      }
    }
    atomic_write_file((fs::path(out_dir) / "plots" / "avg_error.csv").string(),
                      out.str());
  }

  // per-level error trend lines
  {
    std::ostringstream out;
    out << "model,corruption,level,error\n";
    for (int v = 0; v < grid.model_count(); ++v) {
      for (int c = 0; c < grid.corruption_count(); ++c) {
        for (int l = 0; l < EvaluationGrid::kLevels; ++l) {
          out << grid.models()[v] << ',' << grid.corruptions()[c] << ',' << l
              << ',' << fmt_full(grid.error(v, c, l)) << '\n';
        }
      }
    }
    atomic_write_file(
        (fs::path(out_dir) / "plots" / "error_trends.csv").string(), out.str());
  }

  // radar of scaled sub-metric composition
  {
    std::ostringstream out;
    out << "axis,name,metric,scaled_value\n";
    for (std::size_t v = 0; v < report.models.size(); ++v) {
      for (int m = 0; m < kSubMetricCount; ++m) {
        const AggregateValue& a = report.model_scaled[m][v];
        out << "model," << report.models[v] << ',' << sub_metric_names()[m]
            << ',' << (a.defined ? fmt_full(a.value) : "undefined") << '\n';
      }
    }
    for (std::size_t c = 0; c < report.corruptions.size(); ++c) {
      for (int m = 0; m < kSubMetricCount; ++m) {
        const AggregateValue& a = report.corruption_scaled[m][c];
        out << "corruption," << report.corruptions[c] << ','
            << sub_metric_names()[m] << ','
            << (a.defined ? fmt_full(a.value) : "undefined") << '\n';
      }
    }
    atomic_write_file(
        (fs::path(out_dir) / "plots" / "submetric_radar.csv").string(),
        out.str());
  }
}

}  // namespace vrb
