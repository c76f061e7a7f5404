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

#include "fidelis/calibration.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fidelis/errors.hpp"

namespace fidelis {
namespace {

constexpr double kMicrosecond = 1000.0;

std::string describe(const Gate& gate) {
  std::string out(gate_name(gate.kind));
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    out += (i ? "," : " q") + std::to_string(gate.qubits[i]);
  }
  return out;
}

std::string describe(GateKind kind, const std::vector<Qubit>& qubits) {
  return describe(Gate{kind, {}, qubits});
}

} // namespace

CalibrationData::CalibrationData(std::vector<QubitCalibration> qubits,
                                 std::vector<GateCalibration> gates,
                                 std::optional<UniformDefaults> defaults)
    : qubits_(std::move(qubits)), gates_(std::move(gates)),
      defaults_(defaults) {
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    const auto& q = qubits_[i];
    const std::string where = "qubit " + std::to_string(q.id);
    if (!(q.t1_ns > 0.0) || !(q.t2_ns > 0.0)) {
      throw CalibrationError(where + ": t1 and t2 must be positive (t1=" +
                             std::to_string(q.t1_ns / kMicrosecond) +
                             "us, t2=" + std::to_string(q.t2_ns / kMicrosecond) +
                             "us)");
    }
    if (!(q.readout_fidelity >= 0.0 && q.readout_fidelity <= 1.0)) {
      throw CalibrationError(where + ": readout_fidelity " +
                             std::to_string(q.readout_fidelity) +
                             " outside [0,1]");
    }
    if (q.t2_ns > 2.0 * q.t1_ns) {
      warnings_.push_back(where + ": t2 exceeds 2*t1 (t1=" +
                          std::to_string(q.t1_ns / kMicrosecond) + "us, t2=" +
                          std::to_string(q.t2_ns / kMicrosecond) + "us)");
    }
    if (!qubit_index_.emplace(q.id, i).second) {
      throw CalibrationError(where + ": duplicate qubit record");
    }
  }
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const auto& g = gates_[i];
    const std::string where = describe(g.kind, g.qubits);
    if (g.qubits.size() != qubit_arity(g.kind)) {
      throw CalibrationError(where + ": gate kind expects " +
                             std::to_string(qubit_arity(g.kind)) + " qubit(s)");
    }
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
      throw CalibrationError(where + ": repeated qubit");
    }
    if (!(g.fidelity > 0.0 && g.fidelity <= 1.0)) {
      throw CalibrationError(where + ": fidelity " + std::to_string(g.fidelity) +
                             " outside (0,1]");
    }
    if (!(g.duration_ns >= 0.0)) {
      throw CalibrationError(where + ": negative duration");
    }
    for (auto q : g.qubits) {
      if (!qubit_index_.contains(q)) {
        throw CalibrationError(where + ": references qubit " +
                               std::to_string(q) + " with no qubit record");
      }
    }
    if (!gate_index_.emplace(Key{g.kind, g.qubits}, i).second) {
      throw CalibrationError(where + ": duplicate gate record");
    }
  }
  if (defaults_) {
    const auto& d = *defaults_;
    auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!in_unit(d.p1) || !in_unit(d.p2)) {
      throw CalibrationError("defaults: p1/p2 must lie in [0,1]");
    }
    if (!(d.duration1_ns >= 0.0) || !(d.duration2_ns >= 0.0)) {
      throw CalibrationError("defaults: durations must be non-negative");
    }
  }
}

CalibrationData CalibrationData::uniform(double p1, double p2,
                                         double duration1_ns,
                                         double duration2_ns) {
  return CalibrationData({}, {},
                         UniformDefaults{p1, p2, duration1_ns, duration2_ns});
}

bool CalibrationData::has_qubit(Qubit q) const noexcept {
  return qubit_index_.contains(q);
}

const QubitCalibration& CalibrationData::qubit(Qubit q) const {
  auto it = qubit_index_.find(q);
  if (it == qubit_index_.end()) {
    throw MissingCalibrationError("no calibration for qubit " +
                                  std::to_string(q));
  }
  return qubits_[it->second];
}

GateError CalibrationData::lookup(const Gate& gate) const {
  const auto dimension = gate.arity() == 2 ? 4U : 2U;
  auto it = gate_index_.find(Key{gate.kind, gate.qubits});
  if (it == gate_index_.end() && gate.arity() == 2) {
    it = gate_index_.find(Key{gate.kind, {gate.qubits[1], gate.qubits[0]}});
  }
  if (it != gate_index_.end()) {
    const auto& rec = gates_[it->second];
    try {
      return GateError{depolarization_from_fidelity(rec.fidelity, dimension),
                       rec.fidelity, rec.duration_ns, dimension};
    } catch (const CalibrationError& e) {
      throw CalibrationError(describe(gate) + ": " + e.what());
    }
  }
  if (defaults_) {
    const double p = dimension == 2 ? defaults_->p1 : defaults_->p2;
    const double duration =
        dimension == 2 ? defaults_->duration1_ns : defaults_->duration2_ns;
    return GateError{p, 1.0 - p + p / dimension, duration, dimension};
  }
  throw MissingCalibrationError("no calibration for gate " + describe(gate));
}

double depolarization_from_fidelity(double gate_fidelity, unsigned dimension) {
  if (dimension != 2 && dimension != 4) {
    throw CalibrationError("gate dimension must be 2 or 4, got " +
                           std::to_string(dimension));
  }
  const double d = dimension;
  const double p = d * (gate_fidelity - 1.0) / (1.0 - d);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw CalibrationError("gate fidelity " + std::to_string(gate_fidelity) +
                           " maps to depolarization " + std::to_string(p) +
                           " outside [0,1] for d=" + std::to_string(dimension));
  }
  return p;
}

GateError lookup_gate(const CalibrationData& calib, const Gate& gate) {
  return calib.lookup(gate);
}

GateDuration duration_from(const CalibrationData& calib) {
  return [&calib](const Gate& gate) { return calib.lookup(gate).duration_ns; };
}

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw CalibrationError(path + "." + key + ": missing required field");
  }
  return *it;
}

double number(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_number()) {
    throw CalibrationError(path + "." + key + ": expected a number");
  }
  return v.get<double>();
}

Qubit qubit_id(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw CalibrationError(path + ": expected a non-negative integer");
  }
  return v.get<Qubit>();
}

void in_range(double value, double lo, double hi, bool open_lo,
              const std::string& path) {
  const bool ok = (open_lo ? value > lo : value >= lo) && value <= hi;
  if (!ok) {
    std::ostringstream msg;
    msg << path << ": value " << value << " outside " << (open_lo ? "(" : "[")
        << lo << "," << hi << "]";
    throw CalibrationError(msg.str());
  }
}

} // namespace

CalibrationData load_calibration(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CalibrationError(std::string("malformed calibration JSON: ") +
                           e.what());
  }
  if (!doc.is_object()) {
    throw CalibrationError("$: expected an object");
  }

  std::vector<QubitCalibration> qubits;
  const json& jq = field(doc, "qubits", "$");
  if (!jq.is_array()) {
    throw CalibrationError("$.qubits: expected an array");
  }
  for (std::size_t i = 0; i < jq.size(); ++i) {
    const std::string path = "$.qubits[" + std::to_string(i) + "]";
    const json& e = jq[i];
    if (!e.is_object()) {
      throw CalibrationError(path + ": expected an object");
    }
    QubitCalibration q;
    q.id = qubit_id(field(e, "id", path), path + ".id");
    const double t1 = number(e, "t1_us", path);
    const double t2 = number(e, "t2_us", path);
    in_range(t1, 0.0, HUGE_VAL, true, path + ".t1_us");
    in_range(t2, 0.0, HUGE_VAL, true, path + ".t2_us");
    q.t1_ns = t1 * kMicrosecond;
    q.t2_ns = t2 * kMicrosecond;
    q.readout_fidelity = number(e, "readout_fidelity", path);
    in_range(q.readout_fidelity, 0.0, 1.0, false, path + ".readout_fidelity");
    qubits.push_back(q);
  }

  std::vector<GateCalibration> gates;
  const json& jg = field(doc, "gates", "$");
  if (!jg.is_array()) {
    throw CalibrationError("$.gates: expected an array");
  }
  for (std::size_t i = 0; i < jg.size(); ++i) {
    const std::string path = "$.gates[" + std::to_string(i) + "]";
    const json& e = jg[i];
    if (!e.is_object()) {
      throw CalibrationError(path + ": expected an object");
    }
    GateCalibration g;
    const json& kind = field(e, "kind", path);
    if (!kind.is_string()) {
      throw CalibrationError(path + ".kind: expected a string");
    }
    auto parsed = gate_kind_from_name(kind.get<std::string>());
    if (!parsed) {
      throw CalibrationError(path + ".kind: unknown gate '" +
                             kind.get<std::string>() + "'");
    }
    g.kind = *parsed;
    const json& qs = field(e, "qubits", path);
    if (!qs.is_array()) {
      throw CalibrationError(path + ".qubits: expected an array");
    }
    for (std::size_t k = 0; k < qs.size(); ++k) {
      g.qubits.push_back(
          qubit_id(qs[k], path + ".qubits[" + std::to_string(k) + "]"));
    }
    if (g.qubits.size() != qubit_arity(g.kind)) {
      throw CalibrationError(path + ".qubits: gate '" +
                             kind.get<std::string>() + "' expects " +
                             std::to_string(qubit_arity(g.kind)) + " qubit(s)");
    }
    g.fidelity = number(e, "fidelity", path);
    in_range(g.fidelity, 0.0, 1.0, true, path + ".fidelity");
    g.duration_ns = number(e, "duration_ns", path);
    in_range(g.duration_ns, 0.0, HUGE_VAL, false, path + ".duration_ns");
    gates.push_back(std::move(g));
  }

  std::optional<UniformDefaults> defaults;
  if (auto it = doc.find("defaults"); it != doc.end() && !it->is_null()) {
    const std::string path = "$.defaults";
    if (!it->is_object()) {
      throw CalibrationError(path + ": expected an object");
    }
    UniformDefaults d;
    d.p1 = number(*it, "p1", path);
    d.p2 = number(*it, "p2", path);
    d.duration1_ns = number(*it, "duration1_ns", path);
    d.duration2_ns = number(*it, "duration2_ns", path);
    in_range(d.p1, 0.0, 1.0, false, path + ".p1");
    in_range(d.p2, 0.0, 1.0, false, path + ".p2");
    in_range(d.duration1_ns, 0.0, HUGE_VAL, false, path + ".duration1_ns");
    in_range(d.duration2_ns, 0.0, HUGE_VAL, false, path + ".duration2_ns");
    defaults = d;
  }
  return CalibrationData(std::move(qubits), std::move(gates), defaults);
}

CalibrationData load_calibration_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CalibrationError("cannot open calibration file '" + path.string() +
                           "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_calibration(buf.str());
  } catch (const CalibrationError& e) {
    throw CalibrationError(path.string() + ": " + e.what());
  }
}

std::string calibration_to_json(const CalibrationData& calib) {
  json doc;
  doc["qubits"] = json::array();
  for (const auto& q : calib.qubits()) {
    doc["qubits"].push_back({{"id", q.id},
                             {"t1_us", q.t1_ns / kMicrosecond},
                             {"t2_us", q.t2_ns / kMicrosecond},
                             {"readout_fidelity", q.readout_fidelity}});
  }
  doc["gates"] = json::array();
  for (const auto& g : calib.gates()) {
    doc["gates"].push_back({{"kind", std::string(gate_name(g.kind))},
                            {"qubits", g.qubits},
                            {"fidelity", g.fidelity},
                            {"duration_ns", g.duration_ns}});
  }
  if (const auto& d = calib.defaults()) {
    doc["defaults"] = {{"p1", d->p1},
                       {"p2", d->p2},
                       {"duration1_ns", d->duration1_ns},
                       {"duration2_ns", d->duration2_ns}};
  }
  return doc.dump(2);
}

} // namespace fidelis
