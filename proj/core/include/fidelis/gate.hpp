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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fidelis {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t {
  I,
  X,
  Y,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  SX,
  SXdg,
  RX,
  RY,
  RZ,
  U,
  CX,
  CZ,
  CP,
};

inline constexpr std::array kAllGateKinds{
    GateKind::I,  GateKind::X,  GateKind::Y,    GateKind::Z,  GateKind::H,
    GateKind::S,  GateKind::Sdg, GateKind::T,   GateKind::Tdg, GateKind::SX,
    GateKind::SXdg, GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::U,
    GateKind::CX, GateKind::CZ, GateKind::CP};

/// Number of qubits the gate acts on (1 or 2).
std::size_t qubit_arity(GateKind kind) noexcept;
/// Number of real angle parameters.
std::size_t param_arity(GateKind kind) noexcept;
/// Canonical lowercase OpenQASM 2.0 / qelib1 name, e.g. "sxdg", "cp".
std::string_view gate_name(GateKind kind) noexcept;
/// Canonical names only; QASM aliases (u3, cu1, ...) are resolved by the
/// parser.
std::optional<GateKind> gate_kind_from_name(std::string_view name) noexcept;

struct Gate {
  GateKind kind{GateKind::I};
  std::vector<double> params;
  std::vector<Qubit> qubits;

  /// Throws InputError when param/qubit counts do not match the kind or the
  /// qubits are not distinct.
  static Gate make(GateKind kind, std::vector<Qubit> qubits,
                   std::vector<double> params = {});

  std::size_t arity() const noexcept { return qubits.size(); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// The inverse gate: S -> Sdg, RZ(t) -> RZ(-t), U(t,p,l) -> U(-t,-l,-p), ...
Gate inverse(const Gate& gate);

} // namespace fidelis
