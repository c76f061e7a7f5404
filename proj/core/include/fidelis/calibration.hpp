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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fidelis/circuit.hpp"
#include "fidelis/gate.hpp"

namespace fidelis {

/// Coherence times are kept in nanoseconds, the library-wide time base. The
/// JSON document reports them in microseconds.
struct QubitCalibration {
  Qubit id{0};
  double t1_ns{0.0};
  double t2_ns{0.0};
  double readout_fidelity{1.0};
};

struct GateCalibration {
  GateKind kind{GateKind::I};
  std::vector<Qubit> qubits;
  double fidelity{1.0};
  double duration_ns{0.0};
};

/// Uniform error model for synthetic studies. p1/p2 are depolarization
/// factors, not fidelities.
struct UniformDefaults {
  double p1{0.0};
  double p2{0.0};
  double duration1_ns{0.0};
  double duration2_ns{0.0};
};

/// Resolved error model for one gate.
struct GateError {
  double depolarization{0.0};
  double fidelity{1.0};
  double duration_ns{0.0};
  unsigned dimension{2};
};

class CalibrationData {
public:
  CalibrationData() = default;

  /// Validates every invariant; throws CalibrationError naming the offending
  /// entry. t2 > 2*t1 is recorded in warnings() instead of failing.
  CalibrationData(std::vector<QubitCalibration> qubits,
                  std::vector<GateCalibration> gates,
                  std::optional<UniformDefaults> defaults = std::nullopt);

  /// Synthetic device with no per-qubit or per-gate records.
  static CalibrationData uniform(double p1, double p2,
                                 double duration1_ns = 0.0,
                                 double duration2_ns = 0.0);

  std::span<const QubitCalibration> qubits() const noexcept { return qubits_; }
  std::span<const GateCalibration> gates() const noexcept { return gates_; }
  const std::optional<UniformDefaults>& defaults() const noexcept {
    return defaults_;
  }
  std::span<const std::string> warnings() const noexcept { return warnings_; }

  /// Throws MissingCalibrationError when the qubit has no record.
  const QubitCalibration& qubit(Qubit q) const;
  bool has_qubit(Qubit q) const noexcept;

  /// Exact record first, then the reversed pair for two-qubit gates, then
  /// the uniform defaults. Throws MissingCalibrationError otherwise.
  GateError lookup(const Gate& gate) const;

private:
  using Key = std::pair<GateKind, std::vector<Qubit>>;

  std::vector<QubitCalibration> qubits_;
  std::vector<GateCalibration> gates_;
  std::optional<UniformDefaults> defaults_;
  std::map<Qubit, std::size_t> qubit_index_;
  std::map<Key, std::size_t> gate_index_;
  std::vector<std::string> warnings_;
};

/// p = d(F - 1)/(1 - d). Throws CalibrationError if the result leaves [0,1],
/// i.e. for fidelities below 1/d or above 1.
double depolarization_from_fidelity(double gate_fidelity, unsigned dimension);

/// Resolves a gate against the calibration: (p, duration).
GateError lookup_gate(const CalibrationData& calib, const Gate& gate);

/// Loads the JSON calibration document
/// {"qubits":[{"id","t1_us","t2_us","readout_fidelity"}],
///  "gates":[{"kind","qubits","fidelity","duration_ns"}],
///  "defaults":{"p1","p2","duration1_ns","duration2_ns"}}
/// Schema violations name the JSON path of the offending field.
CalibrationData load_calibration(std::string_view json_text);
CalibrationData load_calibration_file(const std::filesystem::path& path);

std::string calibration_to_json(const CalibrationData& calib);

/// Duration lookup usable with schedule_layers.
GateDuration duration_from(const CalibrationData& calib);

} // namespace fidelis
