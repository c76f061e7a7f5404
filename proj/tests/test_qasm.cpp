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

#include <gtest/gtest.h>

#include <numbers>

#include "fidelis/errors.hpp"
#include "fidelis/qasm.hpp"

namespace fidelis {
namespace {

constexpr std::string_view kGhz3 = R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[3];
creg c[3];
h q[0];
cx q[0],q[1];
cx q[1],q[2];
measure q -> c;
)";

TEST(Qasm, ParsesGhz) {
  const auto c = parse_qasm(kGhz3);
  EXPECT_EQ(c.n_qubits(), 3u);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.count_two_qubit_gates(), 2u);
  EXPECT_EQ(c.measured_qubits().size(), 3u);
  EXPECT_EQ(c, [] {
    auto g = generate_ghz(3);
    g.measure_all();
    return g;
  }());
}

TEST(Qasm, HeaderIsOptionalButVersionIsChecked) {
  EXPECT_EQ(parse_qasm("qreg q[1]; x q[0];").size(), 1u);
  EXPECT_THROW(parse_qasm("OPENQASM 3.0; qreg q[1];"), UnsupportedError);
}

TEST(Qasm, ParameterExpressions) {
  const auto c = parse_qasm(
      "qreg q[1];\n"
      "rz(pi/2) q[0];\n"
      "rx(-pi/4 + 2*0.5) q[0];\n"
      "ry(2^3 - sqrt(4)) q[0];\n"
      "rz(sin(pi/2) + cos(0) + ln(exp(1.5)) + tan(0)) q[0];\n"
      "rz(-(1.5e-1)) q[0];\n");
  const auto g = c.gates();
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g[0].params[0], std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(g[1].params[0], -std::numbers::pi / 4 + 1.0);
  EXPECT_DOUBLE_EQ(g[2].params[0], 6.0);
  EXPECT_DOUBLE_EQ(g[3].params[0], 3.5);
  EXPECT_DOUBLE_EQ(g[4].params[0], -0.15);
}

TEST(Qasm, Aliases) {
  const auto c = parse_qasm(
      "qreg q[2];\n"
      "u3(0.1,0.2,0.3) q[0];\n"
      "U(0.1,0.2,0.3) q[0];\n"
      "u2(0.2,0.3) q[1];\n"
      "u1(0.3) q[1];\n"
      "p(0.3) q[1];\n"
      "CX q[0],q[1];\n"
      "cu1(0.4) q[0],q[1];\n"
      "id q[0];\n"
      "i q[0];\n");
  const auto g = c.gates();
  ASSERT_EQ(g.size(), 9u);
  EXPECT_EQ(g[0], g[1]);
  EXPECT_EQ(g[2].kind, GateKind::U);
  EXPECT_DOUBLE_EQ(g[2].params[0], std::numbers::pi / 2);
  EXPECT_EQ(g[3].params, (std::vector<double>{0.0, 0.0, 0.3}));
  EXPECT_EQ(g[3], g[4]);
  EXPECT_EQ(g[5].kind, GateKind::CX);
  EXPECT_EQ(g[6].kind, GateKind::CP);
  EXPECT_EQ(g[7].kind, GateKind::I);
  EXPECT_EQ(g[8].kind, GateKind::I);
}

TEST(Qasm, SwapExpandsToThreeCx) {
  const auto c = parse_qasm("qreg q[3]; swap q[0],q[2];");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.gates()[0].qubits, (std::vector<Qubit>{0, 2}));
  EXPECT_EQ(c.gates()[1].qubits, (std::vector<Qubit>{2, 0}));
  EXPECT_EQ(c.gates()[2].qubits, (std::vector<Qubit>{0, 2}));
}

TEST(Qasm, RegisterBroadcast) {
  const auto c = parse_qasm("qreg q[4]; h q; measure q[1] -> c[1]; barrier q;");
  EXPECT_EQ(c.size(), 4u);
  EXPECT_EQ(c.measured_qubits(), (std::set<Qubit>{1}));
  ASSERT_EQ(c.barriers().size(), 1u);
  EXPECT_TRUE(c.barriers()[0].qubits.empty());
}

TEST(Qasm, CommentsAndWhitespace) {
  const auto c = parse_qasm("// header\nqreg q[2];   // reg\n\n\tx   q[1] ;\n");
  EXPECT_EQ(c.size(), 1u);
}

TEST(Qasm, ErrorsCarryPosition) {
  try {
    parse_qasm("qreg q[2];\nh q[0];\ncx q[0],q[5];\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 11u);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
  try {
    parse_qasm("qreg q[2];\n  h q[0]\nx q[1];");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_qasm("qreg q[2]; cx q[0],q[0];"), ParseError);
  EXPECT_THROW(parse_qasm("qreg q[2]; rz q[0];"), ParseError);
  EXPECT_THROW(parse_qasm("qreg q[2]; h r[0];"), ParseError);
  EXPECT_THROW(parse_qasm("h q[0];"), ParseError);
  EXPECT_THROW(parse_qasm(""), ParseError);
  EXPECT_THROW(parse_qasm("qreg q[1]; x q[0]; $"), ParseError);
}

TEST(Qasm, UnsupportedFeatures) {
  EXPECT_THROW(parse_qasm("qreg q[3]; ccx q[0],q[1],q[2];"), UnsupportedGateError);
  EXPECT_THROW(parse_qasm("qreg q[1]; reset q[0];"), UnsupportedGateError);
  EXPECT_THROW(parse_qasm("qreg q[1]; gate g a { x a; }"), UnsupportedError);
  EXPECT_THROW(parse_qasm("qreg q[1]; creg c[1]; if(c==1) x q[0];"),
               UnsupportedError);
  EXPECT_THROW(parse_qasm("qreg q[1]; qreg r[1];"), UnsupportedError);
}

TEST(Qasm, ErrorTaxonomy) {
  EXPECT_TRUE((std::is_base_of_v<InputError, ParseError>));
  EXPECT_TRUE((std::is_base_of_v<UnsupportedError, UnsupportedGateError>));
}

TEST(Qasm, EmitRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = generate_random({4, 80, 0.3, seed});
    c.append(GateKind::U, {1}, {0.1, -2.5, 1e-17});
    c.append(GateKind::CP, {3, 0}, {std::numbers::pi / 7});
    c.barrier({1, 2});
    c.append(GateKind::SXdg, {2});
    c.barrier();
    c.measure(0).measure(3);
    const auto text = emit_qasm(c);
    EXPECT_EQ(parse_qasm(text), c) << text;
  }
}

TEST(Qasm, EmitOmitsCregWithoutMeasurement) {
  const auto text = emit_qasm(generate_ghz(2));
  EXPECT_EQ(text.find("creg"), std::string::npos);
  EXPECT_NE(text.find("qreg q[2];"), std::string::npos);
}

TEST(Qasm, LoadsFiles) {
  const auto c = load_qasm_file(FIDELIS_TEST_DATA_DIR "/bell_swap.qasm");
  EXPECT_EQ(c.n_qubits(), 4u);
  EXPECT_EQ(c.size(), 9u);
  EXPECT_THROW(load_qasm_file(FIDELIS_TEST_DATA_DIR "/missing.qasm"), InputError);
}

} // namespace
} // namespace fidelis
