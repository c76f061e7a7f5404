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

#include "fidelis/gate.hpp"

#include <algorithm>

#include "fidelis/errors.hpp"

namespace fidelis {

std::size_t qubit_arity(GateKind kind) noexcept {
  switch (kind) {
  case GateKind::CX:
  case GateKind::CZ:
  case GateKind::CP:
    return 2;
  default:
    return 1;
  }
}

std::size_t param_arity(GateKind kind) noexcept {
  switch (kind) {
  case GateKind::RX:
  case GateKind::RY:
  case GateKind::RZ:
  case GateKind::CP:
    return 1;
  case GateKind::U:
    return 3;
  default:
    return 0;
  }
}

std::string_view gate_name(GateKind kind) noexcept {
  switch (kind) {
  case GateKind::I: return "id";
  case GateKind::X: return "x";
  case GateKind::Y: return "y";
  case GateKind::Z: return "z";
  case GateKind::H: return "h";
  case GateKind::S: return "s";
  case GateKind::Sdg: return "sdg";
  case GateKind::T: return "t";
  case GateKind::Tdg: return "tdg";
  case GateKind::SX: return "sx";
  case GateKind::SXdg: return "sxdg";
  case GateKind::RX: return "rx";
  case GateKind::RY: return "ry";
  case GateKind::RZ: return "rz";
  case GateKind::U: return "u";
  case GateKind::CX: return "cx";
  case GateKind::CZ: return "cz";
  case GateKind::CP: return "cp";
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept {
  for (auto kind : kAllGateKinds) {
    if (gate_name(kind) == name) {
      return kind;
    }
  }
  return std::nullopt;
}

Gate Gate::make(GateKind kind, std::vector<Qubit> qubits,
                std::vector<double> params) {
  if (qubits.size() != qubit_arity(kind)) {
    throw InputError("gate '" + std::string(gate_name(kind)) + "' expects " +
                     std::to_string(qubit_arity(kind)) + " qubit(s), got " +
                     std::to_string(qubits.size()));
  }
  if (params.size() != param_arity(kind)) {
    throw InputError("gate '" + std::string(gate_name(kind)) + "' expects " +
                     std::to_string(param_arity(kind)) +
                     " parameter(s), got " + std::to_string(params.size()));
  }
  if (qubits.size() == 2 && qubits[0] == qubits[1]) {
    throw InputError("gate '" + std::string(gate_name(kind)) +
                     "' repeats qubit " + std::to_string(qubits[0]));
  }
  return Gate{kind, std::move(params), std::move(qubits)};
}

Gate inverse(const Gate& gate) {
  Gate inv = gate;
  switch (gate.kind) {
  case GateKind::S: inv.kind = GateKind::Sdg; break;
  case GateKind::Sdg: inv.kind = GateKind::S; break;
  case GateKind::T: inv.kind = GateKind::Tdg; break;
  case GateKind::Tdg: inv.kind = GateKind::T; break;
  case GateKind::SX: inv.kind = GateKind::SXdg; break;
  case GateKind::SXdg: inv.kind = GateKind::SX; break;
  case GateKind::RX:
  case GateKind::RY:
  case GateKind::RZ:
  case GateKind::CP:
    inv.params[0] = -gate.params[0];
    break;
  case GateKind::U:
    inv.params = {-gate.params[0], -gate.params[2], -gate.params[1]};
    break;
  default:
    break;
  }
  return inv;
}

} // namespace fidelis
