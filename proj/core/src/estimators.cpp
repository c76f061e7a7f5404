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

#include "fidelis/estimators.hpp"

#include <cmath>
#include <string>

#include "fidelis/errors.hpp"
#include "fidelis/theory.hpp"

namespace fidelis {

std::string_view method_name(Method method) noexcept {
  switch (method) {
  case Method::Proposed: return "proposed";
  case Method::ESP: return "esp";
  case Method::QVA: return "qva";
  }
  return "?";
}

void EstimatorConfig::validate() const {
  if (!(p_ent >= 0.0 && p_ent <= 1.0)) {
    throw InputError("p_ent " + std::to_string(p_ent) + " outside [0,1]");
  }
  if (!(qva_w >= 0.0 && qva_w <= 1.0)) {
    throw InputError("w " + std::to_string(qva_w) + " outside [0,1]");
  }
}

namespace {

std::vector<GateError> resolve(const Circuit& circ,
                               const CalibrationData& calib) {
  std::vector<GateError> out;
  out.reserve(circ.size());
  for (const auto& gate : circ.gates()) {
    if (gate.arity() < 1 || gate.arity() > 2) {
      throw UnsupportedGateError(std::string(gate_name(gate.kind)) + " on " +
                                 std::to_string(gate.arity()) + " qubits");
    }
    out.push_back(calib.lookup(gate));
  }
  return out;
}

/// Per-layer, per-qubit coherence decay, in schedule order.
struct CoherencePlan {
  std::vector<Layer> layers;
  // factors[l * n + q]
  std::vector<double> factors;
};

CoherencePlan plan_coherence(const Circuit& circ, const CalibrationData& calib,
                             const std::vector<GateError>& errors) {
  CoherencePlan plan;
  const auto* base = circ.gates().data();
  plan.layers = schedule_layers(circ, [&](const Gate& g) {
    return errors[static_cast<std::size_t>(&g - base)].duration_ns;
  });
  const std::size_t n = circ.n_qubits();
  std::vector<const QubitCalibration*> qubits(n);
  for (Qubit q = 0; q < n; ++q) {
    qubits[q] = &calib.qubit(q);
  }
  plan.factors.reserve(plan.layers.size() * n);
  for (const auto& layer : plan.layers) {
    for (Qubit q = 0; q < n; ++q) {
      plan.factors.push_back(theory::coherence_factor(
          layer.duration_ns, qubits[q]->t1_ns, qubits[q]->t2_ns));
    }
  }
  return plan;
}

double readout_product(const Circuit& circ, const CalibrationData& calib) {
  double product = 1.0;
  for (auto q : circ.measured_qubits()) {
    product *= calib.qubit(q).readout_fidelity;
  }
  return product;
}

double coherence_product(const CoherencePlan& plan) {
  double product = 1.0;
  for (double f : plan.factors) {
    product *= f;
  }
  return product;
}

void apply_gate(std::vector<double>& f, const Gate& gate, const GateError& err,
                double p_ent) {
  const double p = err.depolarization;
  if (gate.arity() == 1) {
    double& fq = f[gate.qubits[0]];
    fq = (1.0 - p) * fq + (1.0 - p_ent) * p / 2.0;
    return;
  }
  double& fa = f[gate.qubits[0]];
  double& fb = f[gate.qubits[1]];
  const double correction = (1.0 - p_ent) * theory::eta(fa, fb, p, 4);
  const double keep = std::sqrt(1.0 - p);
  fa = keep * fa + correction;
  fb = keep * fb + correction;
}

std::vector<double> run_proposed(const Circuit& circ,
                                 const std::vector<GateError>& errors,
                                 const CoherencePlan* plan, double p_ent) {
  const std::size_t n = circ.n_qubits();
  std::vector<double> f(n, 1.0);
  const auto gates = circ.gates();
  if (plan == nullptr) {
    for (std::size_t i = 0; i < gates.size(); ++i) {
      apply_gate(f, gates[i], errors[i], p_ent);
    }
    return f;
  }
  for (std::size_t l = 0; l < plan->layers.size(); ++l) {
    for (auto i : plan->layers[l].gate_indices) {
      apply_gate(f, gates[i], errors[i], p_ent);
    }
    for (std::size_t q = 0; q < n; ++q) {
      f[q] *= plan->factors[l * n + q];
    }
  }
  return f;
}

double product(const std::vector<double>& values) {
  double out = 1.0;
  for (double v : values) {
    out *= v;
  }
  return out;
}

double qva_product(const Circuit& circ, const std::vector<GateError>& errors,
                   double w) {
  double out = 1.0;
  const auto gates = circ.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const double fg = errors[i].fidelity;
    out *= gates[i].arity() == 2 ? fg * (1.0 - w * (1.0 - fg)) : fg;
  }
  return out;
}

} // namespace

FidelityEstimate estimate_proposed(const Circuit& circ,
                                   const CalibrationData& calib,
                                   const EstimatorConfig& cfg) {
  cfg.validate();
  const auto errors = resolve(circ, calib);
  CoherencePlan plan;
  const CoherencePlan* planp = nullptr;
  if (cfg.include_coherence) {
    plan = plan_coherence(circ, calib, errors);
    planp = &plan;
  }
  const double readout =
      cfg.include_measurement ? readout_product(circ, calib) : 1.0;

  FidelityEstimate est;
  est.method = Method::Proposed;
  est.per_qubit = run_proposed(circ, errors, planp, cfg.p_ent);
  est.value = product(est.per_qubit) * readout;
  est.lower = product(run_proposed(circ, errors, planp, 1.0)) * readout;
  est.upper = product(run_proposed(circ, errors, planp, 0.0)) * readout;
  return est;
}

FidelityEstimate estimate_esp(const Circuit& circ,
                              const CalibrationData& calib,
                              const EstimatorConfig& cfg) {
  cfg.validate();
  const auto errors = resolve(circ, calib);
  double value = 1.0;
  for (const auto& e : errors) {
    value *= e.fidelity;
  }
  if (cfg.include_coherence) {
    value *= coherence_product(plan_coherence(circ, calib, errors));
  }
  if (cfg.include_measurement) {
    value *= readout_product(circ, calib);
  }
  return FidelityEstimate{value, value, value, Method::ESP, {}};
}

FidelityEstimate estimate_qva(const Circuit& circ,
                              const CalibrationData& calib,
                              const EstimatorConfig& cfg) {
  cfg.validate();
  const auto errors = resolve(circ, calib);
  double scale = 1.0;
  if (cfg.include_coherence) {
    scale *= coherence_product(plan_coherence(circ, calib, errors));
  }
  if (cfg.include_measurement) {
    scale *= readout_product(circ, calib);
  }
  FidelityEstimate est;
  est.method = Method::QVA;
  est.value = qva_product(circ, errors, cfg.qva_w) * scale;
  est.lower = qva_product(circ, errors, 1.0) * scale;
  est.upper = qva_product(circ, errors, 0.0) * scale;
  return est;
}

FidelityEstimate estimate(Method method, const Circuit& circ,
                          const CalibrationData& calib,
                          const EstimatorConfig& cfg) {
  switch (method) {
  case Method::Proposed: return estimate_proposed(circ, calib, cfg);
  case Method::ESP: return estimate_esp(circ, calib, cfg);
  case Method::QVA: return estimate_qva(circ, calib, cfg);
  }
  throw InputError("unknown estimation method");
}

double estimate_bounds_width(const Circuit& circ,
                             const CalibrationData& calib,
                             const EstimatorConfig& cfg) {
  const auto est = estimate_proposed(circ, calib, cfg);
  return est.upper - est.lower;
}

} // namespace fidelis
