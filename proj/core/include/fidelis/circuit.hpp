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
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "fidelis/gate.hpp"

namespace fidelis {

/// A synchronisation point placed before gate `position`. An empty qubit list
/// spans the whole register.
struct Barrier {
  std::size_t position{0};
  std::vector<Qubit> qubits;

  friend bool operator==(const Barrier&, const Barrier&) = default;
};

/// Flat gate list over a single register of `n_qubits` qubits.
class Circuit {
public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::span<const Gate> gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  const std::set<Qubit>& measured_qubits() const noexcept { return measured_; }
  std::span<const Barrier> barriers() const noexcept { return barriers_; }

  /// Validates qubit indices against the register size.
  Circuit& append(Gate gate);
  Circuit& append(GateKind kind, std::vector<Qubit> qubits,
                  std::vector<double> params = {});
  Circuit& barrier(std::vector<Qubit> qubits = {});
  Circuit& measure(Qubit q);
  Circuit& measure_all();

  std::size_t count_two_qubit_gates() const noexcept;

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  void check_qubit(Qubit q) const;

  std::size_t n_qubits_{0};
  std::vector<Gate> gates_;
  std::set<Qubit> measured_;
  std::vector<Barrier> barriers_;
};

/// Reversed gate order with every gate replaced by its inverse. Barriers are
/// mirrored; measured qubits are kept.
Circuit invert(const Circuit& circ);

/// `circ` followed by `invert(circ)`. Ideal output is |0...0>.
Circuit mirror(const Circuit& circ);

/// Concatenates `tail` after `head`; both must share the register size.
Circuit concat(const Circuit& head, const Circuit& tail);

struct Layer {
  std::vector<std::size_t> gate_indices;
  std::vector<Gate> gates;
  double duration_ns{0.0};
};

using GateDuration = std::function<double(const Gate&)>;

/// Greedy as-soon-as-possible layering: each gate lands in the first layer
/// after the last one touching any of its qubits. Barriers align the
/// frontier of the qubits they span.
std::vector<Layer> schedule_layers(const Circuit& circ,
                                   const GateDuration& duration);

/// Gates of all layers, in layer order.
std::vector<Gate> flatten(std::span<const Layer> layers);

Circuit generate_ghz(std::size_t n);
Circuit generate_qft(std::size_t n);

struct RandomCircuitOptions {
  std::size_t n_qubits{4};
  std::size_t n_gates{100};
  double two_qubit_fraction{0.3};
  std::uint64_t seed{0};
};

/// IBM-native style random circuit over {rz, sx, x, cx}.
Circuit generate_random(const RandomCircuitOptions& opts);

} // namespace fidelis
