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

#include <filesystem>
#include <string>
#include <string_view>

#include "fidelis/circuit.hpp"

namespace fidelis {

/// Parses a flat OpenQASM 2.0 program over a single quantum register.
///
/// Accepted: the `OPENQASM 2.0;` header, `include` lines (ignored), one
/// `qreg`, any number of `creg` (ignored), the qelib1 gates listed in
/// `GateKind` plus the aliases u3/u2/u1/p/cu1/CX/U, `swap` (expanded to three
/// cx), `barrier`, and `measure`. Parameter expressions support + - * / ^,
/// unary minus, `pi`, and sin/cos/tan/exp/ln/sqrt.
///
/// Throws ParseError (with line/column) on syntax errors and out-of-range
/// qubits, UnsupportedGateError for unknown gates, and UnsupportedError for
/// `gate`/`opaque` definitions, `if` conditionals and extra quantum registers.
Circuit parse_qasm(std::string_view text);

Circuit load_qasm_file(const std::filesystem::path& path);

/// Serialises in the subset accepted by parse_qasm, with parameters printed
/// to 17 significant digits so that parse_qasm(emit_qasm(c)) == c.
std::string emit_qasm(const Circuit& circ);

} // namespace fidelis
