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

#include "fidelis/metrics.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fidelis/errors.hpp"

namespace fidelis {

MetricsReport compute_metrics(std::span<const double> predicted,
                              std::span<const double> measured) {
  if (predicted.size() != measured.size()) {
    throw InputError("predicted and measured lengths differ");
  }
  const std::size_t n = predicted.size();
  if (n < 2) {
    throw InputError("metrics need at least two samples, got " +
                     std::to_string(n));
  }
  MetricsReport rep;
  rep.n = n;
  double mean_pred = 0.0;
  double mean_meas = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = predicted[i] - measured[i];
    rep.mae += std::abs(e);
    rep.mse += e * e;
    mean_pred += predicted[i];
    mean_meas += measured[i];
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  rep.mae *= inv_n;
  const double sse = rep.mse;
  rep.mse *= inv_n;
  mean_pred *= inv_n;
  mean_meas *= inv_n;

  double ss_meas = 0.0;
  double ss_pred = 0.0;
  double cross = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dm = measured[i] - mean_meas;
    const double dp = predicted[i] - mean_pred;
    ss_meas += dm * dm;
    ss_pred += dp * dp;
    cross += dm * dp;
  }
  if (ss_meas > 0.0) {
    rep.r2 = 1.0 - sse / ss_meas;
  } else {
    rep.note = "measured values have zero variance";
  }
  if (ss_meas > 0.0 && ss_pred > 0.0) {
    rep.pearson = cross / std::sqrt(ss_meas * ss_pred);
  } else if (ss_pred == 0.0) {
    rep.note = rep.note.empty() ? "predicted values have zero variance"
                                : "predicted and measured values have zero variance";
  }
  return rep;
}

MetricsReport compute_metrics_strict(std::span<const double> predicted,
                                     std::span<const double> measured) {
  auto rep = compute_metrics(predicted, measured);
  if (!rep.r2 || !rep.pearson) {
    throw DegenerateVarianceError(rep.note);
  }
  return rep;
}

MetricsReport compute_metrics(std::span<const PredictionRecord> records) {
  std::vector<double> pred;
  std::vector<double> meas;
  pred.reserve(records.size());
  meas.reserve(records.size());
  for (const auto& r : records) {
    pred.push_back(r.predicted);
    meas.push_back(r.measured);
  }
  return compute_metrics(pred, meas);
}

std::map<std::string, MetricsReport>
compute_metrics_by_method(std::span<const PredictionRecord> records) {
  std::map<std::string, std::vector<PredictionRecord>> groups;
  for (const auto& r : records) {
    groups[r.method].push_back(r);
  }
  std::map<std::string, MetricsReport> out;
  for (const auto& [method, rows] : groups) {
    out.emplace(method, compute_metrics(rows));
  }
  return out;
}

namespace {

constexpr const char* kRecordHeader =
    "circuit_id,n_qubits,n_gates,method,predicted,measured";

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    out.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') {
    out.emplace_back();
  }
  return out;
}

template <typename T>
bool parse_cell(const std::string& cell, T& out) {
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
  return ec == std::errc{} && ptr == cell.data() + cell.size();
}

} // namespace

std::vector<PredictionRecord> read_prediction_records(std::istream& in) {
  std::vector<PredictionRecord> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (!header_seen) {
      if (line != kRecordHeader) {
        throw InputError("line " + std::to_string(line_no) +
                         ": expected header '" + kRecordHeader + "'");
      }
      header_seen = true;
      continue;
    }
    const auto cells = split(line);
    auto bad = [&](const std::string& why) {
      return InputError("line " + std::to_string(line_no) + ": " + why);
    };
    if (cells.size() != 6) {
      throw bad("expected 6 fields, got " + std::to_string(cells.size()));
    }
    PredictionRecord rec;
    rec.circuit_id = cells[0];
    rec.method = cells[3];
    if (!parse_cell(cells[1], rec.n_qubits)) throw bad("bad n_qubits '" + cells[1] + "'");
    if (!parse_cell(cells[2], rec.n_gates)) throw bad("bad n_gates '" + cells[2] + "'");
    if (!parse_cell(cells[4], rec.predicted)) throw bad("bad predicted '" + cells[4] + "'");
    if (!parse_cell(cells[5], rec.measured)) throw bad("bad measured '" + cells[5] + "'");
    if (!(rec.predicted >= 0.0 && rec.predicted <= 1.0)) {
      throw bad("predicted " + cells[4] + " outside [0,1]");
    }
    if (!(rec.measured >= 0.0 && rec.measured <= 1.0)) {
      throw bad("measured " + cells[5] + " outside [0,1]");
    }
    out.push_back(std::move(rec));
  }
  if (!header_seen) {
    throw InputError("empty prediction record file");
  }
  return out;
}

void write_prediction_records(std::ostream& out,
                              std::span<const PredictionRecord> records) {
  out << kRecordHeader << '\n';
  char buf[64];
  for (const auto& r : records) {
    out << r.circuit_id << ',' << r.n_qubits << ',' << r.n_gates << ','
        << r.method << ',';
    std::snprintf(buf, sizeof buf, "%.17g,", r.predicted);
    out << buf;
    std::snprintf(buf, sizeof buf, "%.17g", r.measured);
    out << buf << '\n';
  }
}

namespace {

nlohmann::json to_json(const MetricsReport& rep) {
  nlohmann::json j;
  j["mae"] = rep.mae;
  j["mse"] = rep.mse;
  j["r2"] = rep.r2 ? nlohmann::json(*rep.r2) : nlohmann::json(nullptr);
  j["pearson"] =
      rep.pearson ? nlohmann::json(*rep.pearson) : nlohmann::json(nullptr);
  j["n"] = rep.n;
  if (!rep.note.empty()) {
    j["note"] = rep.note;
  }
  return j;
}

} // namespace

std::string metrics_to_json(const MetricsReport& report) {
  return to_json(report).dump();
}

std::string
metrics_to_json(const std::map<std::string, MetricsReport>& reports) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [method, rep] : reports) {
    j[method] = to_json(rep);
  }
  return j.dump(2);
}

} // namespace fidelis
