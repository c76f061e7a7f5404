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

#include <string_view>
#include <vector>

#include "fidelis/calibration.hpp"
#include "fidelis/circuit.hpp"

namespace fidelis {

enum class Method { Proposed, ESP, QVA };

std::string_view method_name(Method method) noexcept;

struct EstimatorConfig {
  /// Assumed entanglement level: 0 gives the upper bound, 1 the lower.
  double p_ent{0.5};
  bool include_coherence{false};
  bool include_measurement{false};
  /// QVA cross-error weight.
  double qva_w{0.5};

  /// Throws InputError when p_ent or qva_w leave [0,1].
  void validate() const;
};

struct FidelityEstimate {
  double value{1.0};
  double lower{1.0};
  double upper{1.0};
  Method method{Method::Proposed};
  /// Final per-qubit fidelities at cfg.p_ent (proposed method only).
  std::vector<double> per_qubit;
};

/// Per-qubit fidelity tracking under depolarizing noise. Single-qubit gates
/// update F_q <- (1-p) F_q + (1-p_ent) p/2; two-qubit gates update both
/// qubits by sqrt(1-p) F + (1-p_ent) eta. With coherence enabled every qubit
/// is scaled after each scheduled layer by the T1/T2 decay of that layer.
FidelityEstimate estimate_proposed(const Circuit& circ,
                                   const CalibrationData& calib,
                                   const EstimatorConfig& cfg = {});

/// Product of calibrated gate fidelities (times readout fidelities and
/// coherence factors when enabled).
FidelityEstimate estimate_esp(const Circuit& circ,
                              const CalibrationData& calib,
                              const EstimatorConfig& cfg = {});

/// Like ESP, but every two-qubit gate contributes F_g (1 - w (1 - F_g)):
/// w = 0 reduces to ESP, w = 1 counts the gate twice.
FidelityEstimate estimate_qva(const Circuit& circ,
                              const CalibrationData& calib,
                              const EstimatorConfig& cfg = {});

FidelityEstimate estimate(Method method, const Circuit& circ,
                          const CalibrationData& calib,
                          const EstimatorConfig& cfg = {});

/// upper - lower of the proposed estimate.
double estimate_bounds_width(const Circuit& circ,
                             const CalibrationData& calib,
                             const EstimatorConfig& cfg = {});

} // namespace fidelis
