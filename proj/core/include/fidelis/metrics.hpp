// Copyright 2026 The Fidelis Authors
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

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fidelis {

struct PredictionRecord {
  std::string circuit_id;
  std::size_t n_qubits{0};
  std::size_t n_gates{0};
  std::string method;
  double predicted{0.0};
  double measured{0.0};
};

/// Regression quality of predictions against measurements. r2 and pearson
/// are empty when the variance they divide by is zero; `note` says why.
struct MetricsReport {
  double mae{0.0};
  double mse{0.0};
  std::optional<double> r2;
  std::optional<double> pearson;
  std::size_t n{0};
  std::string note;
};

/// Throws InputError for fewer than two samples or mismatched lengths.
/// R^2 is taken against the mean of `measured` and may be negative.
MetricsReport compute_metrics(std::span<const double> predicted,
                              std::span<const double> measured);
MetricsReport compute_metrics(std::span<const PredictionRecord> records);

/// Same as compute_metrics but throws DegenerateVarianceError instead of
/// leaving r2/pearson empty.
MetricsReport compute_metrics_strict(std::span<const double> predicted,
                                     std::span<const double> measured);

/// Groups records by method and computes one report per group.
std::map<std::string, MetricsReport>
compute_metrics_by_method(std::span<const PredictionRecord> records);

/// CSV with header circuit_id,n_qubits,n_gates,method,predicted,measured.
/// Throws InputError naming the 1-based line of the first malformed row.
std::vector<PredictionRecord> read_prediction_records(std::istream& in);
void write_prediction_records(std::ostream& out,
                              std::span<const PredictionRecord> records);

/// {"mae":..,"mse":..,"r2":..,"pearson":..,"n":..}; undefined values are null.
std::string metrics_to_json(const MetricsReport& report);
std::string metrics_to_json(const std::map<std::string, MetricsReport>& reports);

} // namespace fidelis
