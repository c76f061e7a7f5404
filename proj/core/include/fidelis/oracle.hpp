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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fidelis/calibration.hpp"
#include "fidelis/circuit.hpp"

namespace fidelis::oracle {

using Complex = std::complex<double>;

/// Hard ceiling on dense state size regardless of the user-facing cap.
inline constexpr std::size_t kMaxDenseQubits = 14;

/// Row-major 2x2 or 4x4 unitary of a gate. For two-qubit gates the local
/// basis index is b0 + 2*b1 where b_i is the bit of gate.qubits[i]; CX uses
/// qubits[0] as control.
std::vector<Complex> gate_unitary(const Gate& gate);

/// Statevector over n qubits; qubit q is bit q of the basis index.
class PureState {
public:
  /// |0...0>.
  explicit PureState(std::size_t n_qubits);
  /// Throws InputError unless the size is a power of two and the norm is 1
  /// within 1e-12.
  static PureState from_amplitudes(std::vector<Complex> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  Complex amplitude(std::size_t i) const { return amps_.at(i); }
  std::span<Complex> mutable_amplitudes() noexcept { return amps_; }

private:
  PureState() = default;

  std::size_t n_qubits_{0};
  std::vector<Complex> amps_;
};

/// Dense 2^n x 2^n density operator.
class DensityMatrix {
public:
  /// |0...0><0...0|.
  explicit DensityMatrix(std::size_t n_qubits);
  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(std::size_t n_qubits);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> data() const noexcept { return data_; }

  Complex trace() const noexcept;
  /// tr(rho^2).
  double purity() const noexcept;
  double max_hermiticity_error() const noexcept;

private:
  std::size_t n_qubits_{0};
  std::size_t dim_{1};
  std::vector<Complex> data_;
};

/// rho -> U rho U^dagger on the gate's qubits.
DensityMatrix apply_gate(DensityMatrix state, const Gate& gate);
PureState apply_gate(PureState state, const Gate& gate);

/// k-qubit depolarizing channel (k = 1 or 2) on the listed qubits:
/// rho -> (1-p) rho + (p/2^k) I_target (x) tr_target(rho).
DensityMatrix apply_depolarizing(DensityMatrix state,
                                 std::span<const Qubit> qubits, double p);

/// Reduced state on `keep` (in the listed order).
DensityMatrix partial_trace(const DensityMatrix& state,
                            std::span<const Qubit> keep);

/// `low` occupies qubits 0..n_low-1, `high` the qubits above.
PureState kron(const PureState& low, const PureState& high);
DensityMatrix kron(const DensityMatrix& low, const DensityMatrix& high);

/// <psi|rho|psi>.
double fidelity_pure_mixed(const PureState& ideal, const DensityMatrix& state);

struct OracleOptions {
  std::size_t max_qubits{10};
};

/// Noiseless statevector evolution; measurements are ignored.
PureState simulate_ideal(const Circuit& circ, const OracleOptions& opts = {});

/// Exact mixed-state evolution from |0...0>: each gate is followed by the
/// depolarizing channel on its qubits with p from the calibration.
DensityMatrix simulate_noisy(const Circuit& circ, const CalibrationData& calib,
                             const OracleOptions& opts = {});

/// fidelity_pure_mixed(simulate_ideal(c), simulate_noisy(c, calib)).
double simulate_fidelity(const Circuit& circ, const CalibrationData& calib,
                         const OracleOptions& opts = {});

} // namespace fidelis::oracle
