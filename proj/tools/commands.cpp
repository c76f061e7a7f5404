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

#include "commands.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "fidelis/calibration.hpp"
#include "fidelis/errors.hpp"
#include "fidelis/estimators.hpp"
#include "fidelis/exploration.hpp"
#include "fidelis/metrics.hpp"
#include "fidelis/oracle.hpp"
#include "fidelis/qasm.hpp"

namespace fidelis::cli {
namespace {

using nlohmann::json;

EstimatorConfig make_config(const ModelFlags& flags) {
  EstimatorConfig cfg;
  cfg.p_ent = flags.p_ent;
  cfg.qva_w = flags.w;
  cfg.include_coherence = flags.coherence;
  cfg.include_measurement = flags.measurement;
  cfg.validate();
  return cfg;
}

CalibrationData load_calibration_logged(const std::filesystem::path& path) {
  auto calib = load_calibration_file(path);
  for (const auto& w : calib.warnings()) {
    spdlog::warn("{}: {}", path.string(), w);
  }
  return calib;
}

Method parse_method(const std::string& name) {
  if (name == "proposed") return Method::Proposed;
  if (name == "esp") return Method::ESP;
  if (name == "qva") return Method::QVA;
  throw InputError("unknown method '" + name + "' (expected proposed, esp or qva)");
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace

void emit(const std::optional<std::filesystem::path>& path,
          const std::string& content) {
  if (!path) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  auto tmp = *path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw InputError("cannot write '" + tmp.string() + "'");
    }
    out << content;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw InputError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, *path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot move output into '" + path->string() +
                     "': " + ec.message());
  }
  spdlog::info("wrote {}", path->string());
}

std::vector<std::size_t> parse_count_list(const std::string& spec) {
  auto to_size = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InputError("bad qubit count '" + std::string(s) + "' in '" + spec + "'");
    }
    return v;
  };
  std::vector<std::size_t> out;
  if (auto dots = spec.find(".."); dots != std::string::npos) {
    const auto lo = to_size(std::string_view(spec).substr(0, dots));
    const auto hi = to_size(std::string_view(spec).substr(dots + 2));
    if (lo > hi) {
      throw InputError("empty range '" + spec + "'");
    }
    for (auto n = lo; n <= hi; ++n) {
      out.push_back(n);
    }
    return out;
  }
  std::istringstream ss(spec);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    out.push_back(to_size(cell));
  }
  if (out.empty()) {
    throw InputError("empty qubit-count list");
  }
  return out;
}

std::vector<double> parse_value_list(const std::string& spec) {
  auto to_double = [&](std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InputError("bad value '" + std::string(s) + "' in '" + spec + "'");
    }
    return v;
  };
  std::vector<std::string> cells;
  std::istringstream ss(spec.rfind("lin:", 0) == 0 ? spec.substr(4) : spec);
  std::string cell;
  const char sep = spec.rfind("lin:", 0) == 0 ? ':' : ',';
  while (std::getline(ss, cell, sep)) {
    cells.push_back(cell);
  }
  std::vector<double> out;
  if (spec.rfind("lin:", 0) == 0) {
    if (cells.size() != 3) {
      throw InputError("expected lin:start:stop:count, got '" + spec + "'");
    }
    const double start = to_double(cells[0]);
    const double stop = to_double(cells[1]);
    const auto count = static_cast<std::size_t>(to_double(cells[2]));
    if (count < 1) {
      throw InputError("lin count must be positive in '" + spec + "'");
    }
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(count == 1 ? start
                               : start + (stop - start) * static_cast<double>(i) /
                                             static_cast<double>(count - 1));
    }
    return out;
  }
  for (const auto& c : cells) {
    out.push_back(to_double(c));
  }
  if (out.empty()) {
    throw InputError("empty value list");
  }
  return out;
}

int cmd_estimate(const EstimateArgs& args) {
  const auto circ = load_qasm_file(args.qasm);
  const auto calib = load_calibration_logged(args.calibration);
  const auto cfg = make_config(args.model);
  const auto method = parse_method(args.method);
  const auto est = estimate(method, circ, calib, cfg);

  json j;
  j["method"] = std::string(method_name(method));
  j["value"] = est.value;
  j["lower"] = est.lower;
  j["upper"] = est.upper;
  j["n_qubits"] = circ.n_qubits();
  j["n_gates"] = circ.size();
  j["config"] = {{"p_ent", cfg.p_ent},
                 {"w", cfg.qva_w},
                 {"coherence", cfg.include_coherence},
                 {"measurement", cfg.include_measurement}};
  if (!est.per_qubit.empty()) {
    j["per_qubit"] = est.per_qubit;
  }
  emit(args.out, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_simulate(const SimulateArgs& args) {
  const auto circ = load_qasm_file(args.qasm);
  const auto calib = load_calibration_logged(args.calibration);
  const oracle::OracleOptions opts{args.oracle_cap};
  const auto ideal = oracle::simulate_ideal(circ, opts);
  const auto noisy = oracle::simulate_noisy(circ, calib, opts);

  json j;
  j["fidelity"] = oracle::fidelity_pure_mixed(ideal, noisy);
  j["purity"] = noisy.purity();
  j["trace"] = noisy.trace().real();
  j["n_qubits"] = circ.n_qubits();
  j["n_gates"] = circ.size();
  emit(args.out, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_compare(const CompareArgs& args) {
  const auto circ = load_qasm_file(args.qasm);
  const auto calib = load_calibration_logged(args.calibration);
  const auto base = make_config(args.model);

  std::ostringstream csv;
  csv << "method,coherence,value,lower,upper,status\n";
  for (auto method : {Method::Proposed, Method::ESP, Method::QVA}) {
    for (bool coherence : {false, true}) {
      auto cfg = base;
      cfg.include_coherence = coherence;
      csv << method_name(method) << ',' << (coherence ? "on" : "off") << ',';
      try {
        const auto est = estimate(method, circ, calib, cfg);
        csv << fmt_double(est.value) << ',' << fmt_double(est.lower) << ','
            << fmt_double(est.upper) << ",ok\n";
      } catch (const MissingCalibrationError& e) {
        // Without T1/T2 records only the coherence rows are lost.
        if (!coherence) {
          throw;
        }
        spdlog::warn("{} with coherence skipped: {}", method_name(method), e.what());
        csv << ",,,skipped: missing qubit calibration\n";
      }
    }
  }
  if (args.with_oracle) {
    csv << "oracle,off,";
    try {
      const double f = oracle::simulate_fidelity(circ, calib, {args.oracle_cap});
      csv << fmt_double(f) << ',' << fmt_double(f) << ',' << fmt_double(f)
          << ",ok\n";
    } catch (const SizeError& e) {
      spdlog::warn("oracle skipped: {}", e.what());
      csv << ",,,skipped: size\n";
    }
  }
  emit(args.out, csv.str());
  return kExitOk;
}

int cmd_sweep(const SweepArgs& args) {
  CircuitFamily family;
  std::vector<std::size_t> ns;
  if (args.qasm) {
    auto circ = load_qasm_file(*args.qasm);
    ns = {circ.n_qubits()};
    if (!args.n_spec.empty() && parse_count_list(args.n_spec) != ns) {
      throw InputError("--n must match the circuit width (" +
                       std::to_string(circ.n_qubits()) + ") when sweeping --qasm");
    }
    family = CircuitFamily::fixed(args.family.empty() ? args.qasm->stem().string()
                                                      : args.family,
                                  std::move(circ));
  } else {
    if (args.family.empty()) {
      throw InputError("sweep needs --family or --qasm");
    }
    family = CircuitFamily::by_name(args.family);
    ns = parse_count_list(args.n_spec.empty() ? "2..8" : args.n_spec);
  }
  const auto p1s = parse_value_list(args.p1_spec);
  const auto p2s = parse_value_list(args.p2_spec);
  EstimatorConfig cfg;
  cfg.p_ent = args.p_ent;
  const auto result = sweep_grid(family, ns, p1s, p2s, cfg, args.threads);
  std::ostringstream csv;
  write_sweep_csv(csv, result);
  emit(args.out, csv.str());
  return kExitOk;
}

int cmd_threshold(const ThresholdArgs& args) {
  const auto family = CircuitFamily::by_name(args.family);
  EstimatorConfig cfg;
  cfg.p_ent = args.p_ent;
  const auto rows =
      threshold_curve(family, args.n_min, args.n_max, args.p1, args.target, cfg);
  std::ostringstream csv;
  write_threshold_csv(csv, rows);
  emit(args.out, csv.str());
  return kExitOk;
}

int cmd_metrics(const MetricsArgs& args) {
  std::ifstream in(args.records);
  if (!in) {
    throw InputError("cannot open records file '" + args.records.string() + "'");
  }
  std::vector<PredictionRecord> records;
  try {
    records = read_prediction_records(in);
  } catch (const InputError& e) {
    throw InputError(args.records.string() + ": " + e.what());
  }
  const auto reports = compute_metrics_by_method(records);
  for (const auto& [method, rep] : reports) {
    if (!rep.note.empty()) {
      spdlog::warn("{}: {}", method, rep.note);
    }
  }
  emit(args.out, metrics_to_json(reports) + "\n");
  return kExitOk;
}

int cmd_generate(const GenerateArgs& args) {
  Circuit circ;
  if (args.family == "ghz") {
    circ = generate_ghz(args.n);
  } else if (args.family == "qft") {
    circ = generate_qft(args.n);
  } else if (args.family == "random") {
    if (!args.seed) {
      throw InputError("random circuits require --seed");
    }
    circ = generate_random({args.n, args.gates, args.two_qubit_fraction, *args.seed});
  } else {
    throw InputError("unknown family '" + args.family +
                     "' (expected ghz, qft or random)");
  }
  if (args.mirror) {
    circ = mirror(circ);
  }
  if (args.measure) {
    circ.measure_all();
  }
  emit(args.out, emit_qasm(circ));
  return kExitOk;
}

} // namespace fidelis::cli
