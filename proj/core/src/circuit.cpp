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

#include "fidelis/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fidelis/errors.hpp"

namespace fidelis {

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0) {
    throw InputError("circuit needs at least one qubit");
  }
}

void Circuit::check_qubit(Qubit q) const {
  if (q >= n_qubits_) {
    throw InputError("qubit index " + std::to_string(q) +
                     " out of range for " + std::to_string(n_qubits_) +
                     "-qubit register");
  }
}

Circuit& Circuit::append(Gate gate) {
  for (auto q : gate.qubits) {
    check_qubit(q);
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(GateKind kind, std::vector<Qubit> qubits,
                         std::vector<double> params) {
  return append(Gate::make(kind, std::move(qubits), std::move(params)));
}

Circuit& Circuit::barrier(std::vector<Qubit> qubits) {
  for (auto q : qubits) {
    check_qubit(q);
  }
  barriers_.push_back(Barrier{gates_.size(), std::move(qubits)});
  return *this;
}

Circuit& Circuit::measure(Qubit q) {
  check_qubit(q);
  measured_.insert(q);
  return *this;
}

Circuit& Circuit::measure_all() {
  for (Qubit q = 0; q < n_qubits_; ++q) {
    measured_.insert(q);
  }
  return *this;
}

std::size_t Circuit::count_two_qubit_gates() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      gates_.begin(), gates_.end(),
      [](const Gate& g) { return g.arity() == 2; }));
}

Circuit invert(const Circuit& circ) {
  Circuit out(circ.n_qubits());
  const auto gates = circ.gates();
  const auto n = gates.size();
  // Barriers are emitted in reverse so that positions stay sorted.
  auto barriers = circ.barriers();
  auto next_barrier = barriers.rbegin();
  auto flush_barriers = [&](std::size_t emitted) {
    while (next_barrier != barriers.rend() &&
           n - next_barrier->position == emitted) {
      out.barrier(next_barrier->qubits);
      ++next_barrier;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    flush_barriers(i);
    out.append(inverse(gates[n - 1 - i]));
  }
  flush_barriers(n);
  for (auto q : circ.measured_qubits()) {
    out.measure(q);
  }
  return out;
}

Circuit concat(const Circuit& head, const Circuit& tail) {
  if (head.n_qubits() != tail.n_qubits()) {
    throw InputError("cannot concatenate circuits over " +
                     std::to_string(head.n_qubits()) + " and " +
                     std::to_string(tail.n_qubits()) + " qubits");
  }
  Circuit out = head;
  auto barriers = tail.barriers();
  auto next_barrier = barriers.begin();
  const auto gates = tail.gates();
  for (std::size_t i = 0; i <= gates.size(); ++i) {
    while (next_barrier != barriers.end() && next_barrier->position == i) {
      out.barrier(next_barrier->qubits);
      ++next_barrier;
    }
    if (i < gates.size()) {
      out.append(gates[i]);
    }
  }
  for (auto q : tail.measured_qubits()) {
    out.measure(q);
  }
  return out;
}

Circuit mirror(const Circuit& circ) { return concat(circ, invert(circ)); }

std::vector<Layer> schedule_layers(const Circuit& circ,
                                   const GateDuration& duration) {
  std::vector<Layer> layers;
  std::vector<std::size_t> frontier(circ.n_qubits(), 0);
  auto barriers = circ.barriers();
  auto next_barrier = barriers.begin();

  auto align = [&](const Barrier& b) {
    std::size_t top = 0;
    if (b.qubits.empty()) {
      top = *std::max_element(frontier.begin(), frontier.end());
      std::fill(frontier.begin(), frontier.end(), top);
      return;
    }
    for (auto q : b.qubits) {
      top = std::max(top, frontier[q]);
    }
    for (auto q : b.qubits) {
      frontier[q] = top;
    }
  };

  const auto gates = circ.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    while (next_barrier != barriers.end() && next_barrier->position == i) {
      align(*next_barrier++);
    }
    const Gate& gate = gates[i];
    std::size_t slot = 0;
    for (auto q : gate.qubits) {
      slot = std::max(slot, frontier[q]);
    }
    if (slot == layers.size()) {
      layers.emplace_back();
    }
    Layer& layer = layers[slot];
    layer.gate_indices.push_back(i);
    layer.gates.push_back(gate);
    layer.duration_ns = std::max(layer.duration_ns, duration(gate));
    for (auto q : gate.qubits) {
      frontier[q] = slot + 1;
    }
  }
  return layers;
}

std::vector<Gate> flatten(std::span<const Layer> layers) {
  std::vector<Gate> out;
  for (const auto& layer : layers) {
    out.insert(out.end(), layer.gates.begin(), layer.gates.end());
  }
  return out;
}

Circuit generate_ghz(std::size_t n) {
  if (n == 0) {
    throw InputError("GHZ circuit needs at least one qubit");
  }
  Circuit circ(n);
  circ.append(GateKind::H, {0});
  for (Qubit q = 0; q + 1 < n; ++q) {
    circ.append(GateKind::CX, {q, q + 1});
  }
  return circ;
}

Circuit generate_qft(std::size_t n) {
  if (n == 0) {
    throw InputError("QFT circuit needs at least one qubit");
  }
  Circuit circ(n);
  for (Qubit i = 0; i < n; ++i) {
    circ.append(GateKind::H, {i});
    for (Qubit k = i + 1; k < n; ++k) {
      const double angle = std::numbers::pi / std::ldexp(1.0, static_cast<int>(k - i));
      circ.append(GateKind::CP, {k, i}, {angle});
    }
  }
  for (Qubit i = 0; i < n / 2; ++i) {
    const Qubit a = i;
    const Qubit b = static_cast<Qubit>(n - 1 - i);
    circ.append(GateKind::CX, {a, b});
    circ.append(GateKind::CX, {b, a});
    circ.append(GateKind::CX, {a, b});
  }
  return circ;
}

namespace {

// Bit-exact [0,1) draw on every standard library.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t index_draw(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(unit_draw(rng) * static_cast<double>(bound));
}

} // namespace

Circuit generate_random(const RandomCircuitOptions& opts) {
  Circuit circ(opts.n_qubits);
  std::mt19937_64 rng(opts.seed);
  const auto n = static_cast<std::uint64_t>(opts.n_qubits);
  for (std::size_t i = 0; i < opts.n_gates; ++i) {
    if (n >= 2 && unit_draw(rng) < opts.two_qubit_fraction) {
      const auto a = static_cast<Qubit>(index_draw(rng, n));
      auto b = static_cast<Qubit>(index_draw(rng, n - 1));
      if (b >= a) {
        ++b;
      }
      circ.append(GateKind::CX, {a, b});
      continue;
    }
    const auto q = static_cast<Qubit>(index_draw(rng, n));
    switch (index_draw(rng, 3)) {
    case 0:
      circ.append(GateKind::RZ, {q},
                  {(2.0 * unit_draw(rng) - 1.0) * std::numbers::pi});
      break;
    case 1:
      circ.append(GateKind::SX, {q});
      break;
    default:
      circ.append(GateKind::X, {q});
      break;
    }
  }
  return circ;
}

} // namespace fidelis
