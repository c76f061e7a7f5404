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
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fidelis/circuit.hpp"
#include "fidelis/estimators.hpp"

namespace fidelis {

/// A named source of circuits indexed by qubit count.
struct CircuitFamily {
  std::string name;
  std::function<Circuit(std::size_t)> make;

  static CircuitFamily ghz();
  static CircuitFamily qft();
  /// Looks up "ghz" or "qft"; throws InputError otherwise.
  static CircuitFamily by_name(const std::string& name);
  /// Wraps a fixed circuit; the requested qubit count must match it.
  static CircuitFamily fixed(std::string name, Circuit circ);
};

struct SweepRow {
  std::string circuit_family;
  std::size_t n_qubits{0};
  double p1{0.0};
  double p2{0.0};
  double fidelity{1.0};
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Proposed-estimator fidelity for every (n, p1, p2) under a uniform
/// synthetic calibration. Rows are ordered by (n, p1, p2) ascending whatever
/// the thread count. Coherence must be disabled in `cfg`.
SweepResult sweep_grid(const CircuitFamily& family,
                       std::span<const std::size_t> n_values,
                       std::span<const double> p1_values,
                       std::span<const double> p2_values,
                       const EstimatorConfig& cfg = {},
                       std::size_t threads = 1);

struct ThresholdResult {
  std::optional<double> p2; // empty when infeasible
  std::string reason;       // why infeasible

  bool feasible() const noexcept { return p2.has_value(); }
};

/// Largest p2 in [0, 0.5] whose estimated fidelity still reaches `target`,
/// found by bisection to 1e-7 relative width. Infeasible when the target is
/// not in (0,1), is unreachable at p2 = 0, or the required p2 drops below p1.
ThresholdResult threshold_p2(const Circuit& circ, double p1, double target,
                             const EstimatorConfig& cfg = {});
ThresholdResult threshold_p2(const CircuitFamily& family, std::size_t n,
                             double p1, double target,
                             const EstimatorConfig& cfg = {});

struct ThresholdRow {
  std::string circuit_family;
  std::size_t n_qubits{0};
  double p1{0.0};
  double target{0.0};
  ThresholdResult result;
};

/// threshold_p2 for n = n_min..n_max; stops after the first infeasible row.
std::vector<ThresholdRow> threshold_curve(const CircuitFamily& family,
                                          std::size_t n_min, std::size_t n_max,
                                          double p1, double target,
                                          const EstimatorConfig& cfg = {});

/// circuit_family,n_qubits,p1,p2,fidelity
void write_sweep_csv(std::ostream& out, const SweepResult& result);
/// circuit_family,n_qubits,p1,target,p2,status
void write_threshold_csv(std::ostream& out, std::span<const ThresholdRow> rows);

} // namespace fidelis
