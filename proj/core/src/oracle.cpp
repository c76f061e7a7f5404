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

#include "fidelis/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "fidelis/errors.hpp"

namespace fidelis::oracle {
namespace {

constexpr Complex kI{0.0, 1.0};

void check_size(std::size_t n_qubits) {
  if (n_qubits > kMaxDenseQubits) {
    throw SizeError(std::to_string(n_qubits) +
                    " qubits exceed the dense-state limit of " +
                    std::to_string(kMaxDenseQubits));
  }
}

/// Offsets of the 2^k local basis states of a k-qubit subsystem, plus the
/// indices with all subsystem bits cleared.
struct LocalBasis {
  std::size_t count{0};
  std::array<std::size_t, 4> offsets{};
  std::vector<std::size_t> bases;
};

LocalBasis local_basis(std::span<const Qubit> qubits, std::size_t n_qubits) {
  if (qubits.empty() || qubits.size() > 2) {
    throw UnsupportedError("oracle supports 1- and 2-qubit operations, got " +
                           std::to_string(qubits.size()) + " qubits");
  }
  std::size_t mask = 0;
  for (auto q : qubits) {
    if (q >= n_qubits) {
      throw InputError("qubit " + std::to_string(q) + " out of range for " +
                       std::to_string(n_qubits) + "-qubit state");
    }
    mask |= std::size_t{1} << q;
  }
  if (std::popcount(mask) != static_cast<int>(qubits.size())) {
    throw InputError("repeated qubit in operation");
  }
  LocalBasis lb;
  lb.count = std::size_t{1} << qubits.size();
  for (std::size_t l = 0; l < lb.count; ++l) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      if ((l >> i) & 1U) {
        off |= std::size_t{1} << qubits[i];
      }
    }
    lb.offsets[l] = off;
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  lb.bases.reserve(dim / lb.count);
  for (std::size_t b = 0; b < dim; ++b) {
    if ((b & mask) == 0) {
      lb.bases.push_back(b);
    }
  }
  return lb;
}

} // namespace

std::vector<Complex> gate_unitary(const Gate& gate) {
  using std::cos;
  using std::exp;
  using std::sin;
  const double r2 = 1.0 / std::numbers::sqrt2;
  auto half = [&](std::size_t i) { return gate.params.at(i) / 2.0; };
  switch (gate.kind) {
  case GateKind::I: return {1, 0, 0, 1};
  case GateKind::X: return {0, 1, 1, 0};
  case GateKind::Y: return {0, -kI, kI, 0};
  case GateKind::Z: return {1, 0, 0, -1};
  case GateKind::H: return {r2, r2, r2, -r2};
  case GateKind::S: return {1, 0, 0, kI};
  case GateKind::Sdg: return {1, 0, 0, -kI};
  case GateKind::T: return {1, 0, 0, exp(kI * (std::numbers::pi / 4))};
  case GateKind::Tdg: return {1, 0, 0, exp(-kI * (std::numbers::pi / 4))};
  case GateKind::SX:
    return {Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5),
            Complex(0.5, 0.5)};
  case GateKind::SXdg:
    return {Complex(0.5, -0.5), Complex(0.5, 0.5), Complex(0.5, 0.5),
            Complex(0.5, -0.5)};
  case GateKind::RX: {
    const double c = cos(half(0)), s = sin(half(0));
    return {c, -kI * s, -kI * s, c};
  }
  case GateKind::RY: {
    const double c = cos(half(0)), s = sin(half(0));
    return {c, -s, s, c};
  }
  case GateKind::RZ:
    return {exp(-kI * half(0)), 0, 0, exp(kI * half(0))};
  case GateKind::U: {
    const double theta = gate.params.at(0), phi = gate.params.at(1),
                 lambda = gate.params.at(2);
    const double c = cos(theta / 2), s = sin(theta / 2);
    return {c, -exp(kI * lambda) * s, exp(kI * phi) * s,
            exp(kI * (phi + lambda)) * c};
  }
  case GateKind::CX:
    // |b1 b0>, control b0: swaps local states 1 and 3.
    return {1, 0, 0, 0, //
            0, 0, 0, 1, //
            0, 0, 1, 0, //
            0, 1, 0, 0};
  case GateKind::CZ:
    return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
  case GateKind::CP:
    return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0,
            0, 0, 0, exp(kI * gate.params.at(0))};
  }
  throw UnsupportedGateError(std::string(gate_name(gate.kind)));
}

PureState::PureState(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_size(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
  amps_[0] = 1.0;
}

PureState PureState::from_amplitudes(std::vector<Complex> amplitudes) {
  if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
    throw InputError("amplitude count must be a power of two");
  }
  double norm = 0.0;
  for (const auto& a : amplitudes) {
    norm += std::norm(a);
  }
  if (std::abs(norm - 1.0) > 1e-12) {
    throw InputError("state is not normalised (norm^2 = " +
                     std::to_string(norm) + ")");
  }
  PureState psi;
  psi.n_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
  check_size(psi.n_qubits_);
  psi.amps_ = std::move(amplitudes);
  return psi;
}

DensityMatrix::DensityMatrix(std::size_t n_qubits)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits) {
  check_size(n_qubits);
  data_.assign(dim_ * dim_, Complex{});
  data_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  DensityMatrix rho(psi.n_qubits());
  const auto amps = psi.amplitudes();
  for (std::size_t r = 0; r < rho.dim_; ++r) {
    for (std::size_t c = 0; c < rho.dim_; ++c) {
      rho(r, c) = amps[r] * std::conj(amps[c]);
    }
  }
  return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
  DensityMatrix rho(n_qubits);
  rho.data_[0] = 0.0;
  const double w = 1.0 / static_cast<double>(rho.dim_);
  for (std::size_t i = 0; i < rho.dim_; ++i) {
    rho(i, i) = w;
  }
  return rho;
}

Complex DensityMatrix::trace() const noexcept {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

double DensityMatrix::purity() const noexcept {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const auto& v : data_) {
    s += std::norm(v);
  }
  return s;
}

double DensityMatrix::max_hermiticity_error() const noexcept {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

DensityMatrix apply_gate(DensityMatrix state, const Gate& gate) {
  const auto lb = local_basis(gate.qubits, state.n_qubits());
  const auto u = gate_unitary(gate);
  const std::size_t k = lb.count;
  const std::size_t dim = state.dim();
  std::array<Complex, 4> in{};

  // rho <- U rho
  for (auto rb : lb.bases) {
    for (std::size_t c = 0; c < dim; ++c) {
      for (std::size_t l = 0; l < k; ++l) {
        in[l] = state(rb + lb.offsets[l], c);
      }
      for (std::size_t l = 0; l < k; ++l) {
        Complex acc{};
        for (std::size_t m = 0; m < k; ++m) {
          acc += u[l * k + m] * in[m];
        }
        state(rb + lb.offsets[l], c) = acc;
      }
    }
  }
  // rho <- rho U^dagger
  for (std::size_t r = 0; r < dim; ++r) {
    for (auto cb : lb.bases) {
      for (std::size_t l = 0; l < k; ++l) {
        in[l] = state(r, cb + lb.offsets[l]);
      }
      for (std::size_t l = 0; l < k; ++l) {
        Complex acc{};
        for (std::size_t m = 0; m < k; ++m) {
          acc += in[m] * std::conj(u[l * k + m]);
        }
        state(r, cb + lb.offsets[l]) = acc;
      }
    }
  }
  return state;
}

PureState apply_gate(PureState state, const Gate& gate) {
  const auto lb = local_basis(gate.qubits, state.n_qubits());
  const auto u = gate_unitary(gate);
  const std::size_t k = lb.count;
  auto amps = state.mutable_amplitudes();
  std::array<Complex, 4> in{};
  for (auto b : lb.bases) {
    for (std::size_t l = 0; l < k; ++l) {
      in[l] = amps[b + lb.offsets[l]];
    }
    for (std::size_t l = 0; l < k; ++l) {
      Complex acc{};
      for (std::size_t m = 0; m < k; ++m) {
        acc += u[l * k + m] * in[m];
      }
      amps[b + lb.offsets[l]] = acc;
    }
  }
  return state;
}

DensityMatrix apply_depolarizing(DensityMatrix state,
                                 std::span<const Qubit> qubits, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError("depolarization " + std::to_string(p) + " outside [0,1]");
  }
  const auto lb = local_basis(qubits, state.n_qubits());
  if (p == 0.0) {
    return state;
  }
  const std::size_t k = lb.count;
  const double keep = 1.0 - p;
  const double mix = p / static_cast<double>(k);
  for (auto rb : lb.bases) {
    for (auto cb : lb.bases) {
      Complex traced{};
      for (std::size_t s = 0; s < k; ++s) {
        traced += state(rb + lb.offsets[s], cb + lb.offsets[s]);
      }
      for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t t = 0; t < k; ++t) {
          Complex& v = state(rb + lb.offsets[s], cb + lb.offsets[t]);
          v *= keep;
          if (s == t) {
            v += mix * traced;
          }
        }
      }
    }
  }
  return state;
}

DensityMatrix partial_trace(const DensityMatrix& state,
                            std::span<const Qubit> keep) {
  const std::size_t n = state.n_qubits();
  std::size_t keep_mask = 0;
  for (auto q : keep) {
    if (q >= n) {
      throw InputError("qubit " + std::to_string(q) + " out of range");
    }
    keep_mask |= std::size_t{1} << q;
  }
  if (std::popcount(keep_mask) != static_cast<int>(keep.size()) ||
      keep.empty()) {
    throw InputError("partial trace needs distinct qubits to keep");
  }
  std::vector<Qubit> traced;
  for (Qubit q = 0; q < n; ++q) {
    if (!((keep_mask >> q) & 1U)) {
      traced.push_back(q);
    }
  }
  auto spread = [](std::size_t bits, std::span<const Qubit> where) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < where.size(); ++i) {
      if ((bits >> i) & 1U) {
        out |= std::size_t{1} << where[i];
      }
    }
    return out;
  };
  DensityMatrix out(keep.size());
  out(0, 0) = 0.0;
  const std::size_t dk = out.dim();
  const std::size_t dt = std::size_t{1} << traced.size();
  for (std::size_t r = 0; r < dk; ++r) {
    const std::size_t fr = spread(r, keep);
    for (std::size_t c = 0; c < dk; ++c) {
      const std::size_t fc = spread(c, keep);
      Complex acc{};
      for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t ft = spread(t, traced);
        acc += state(fr | ft, fc | ft);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

PureState kron(const PureState& low, const PureState& high) {
  const std::size_t nl = low.n_qubits();
  std::vector<Complex> amps(low.dim() * high.dim());
  for (std::size_t h = 0; h < high.dim(); ++h) {
    for (std::size_t l = 0; l < low.dim(); ++l) {
      amps[l + (h << nl)] = low.amplitudes()[l] * high.amplitudes()[h];
    }
  }
  return PureState::from_amplitudes(std::move(amps));
}

DensityMatrix kron(const DensityMatrix& low, const DensityMatrix& high) {
  const std::size_t nl = low.n_qubits();
  DensityMatrix out(nl + high.n_qubits());
  for (std::size_t rh = 0; rh < high.dim(); ++rh) {
    for (std::size_t ch = 0; ch < high.dim(); ++ch) {
      const Complex b = high(rh, ch);
      for (std::size_t rl = 0; rl < low.dim(); ++rl) {
        for (std::size_t cl = 0; cl < low.dim(); ++cl) {
          out(rl + (rh << nl), cl + (ch << nl)) = low(rl, cl) * b;
        }
      }
    }
  }
  return out;
}

double fidelity_pure_mixed(const PureState& ideal, const DensityMatrix& state) {
  if (ideal.dim() != state.dim()) {
    throw InputError("dimension mismatch: pure state " +
                     std::to_string(ideal.dim()) + " vs density matrix " +
                     std::to_string(state.dim()));
  }
  const auto psi = ideal.amplitudes();
  const std::size_t dim = state.dim();
  Complex acc{};
  for (std::size_t r = 0; r < dim; ++r) {
    if (psi[r] == Complex{}) {
      continue;
    }
    Complex row{};
    for (std::size_t c = 0; c < dim; ++c) {
      row += state(r, c) * psi[c];
    }
    acc += std::conj(psi[r]) * row;
  }
  return acc.real();
}

namespace {

void check_cap(const Circuit& circ, const OracleOptions& opts) {
  if (circ.n_qubits() > opts.max_qubits) {
    throw SizeError("circuit has " + std::to_string(circ.n_qubits()) +
                    " qubits, oracle cap is " +
                    std::to_string(opts.max_qubits));
  }
}

} // namespace

PureState simulate_ideal(const Circuit& circ, const OracleOptions& opts) {
  check_cap(circ, opts);
  PureState psi(circ.n_qubits());
  for (const auto& gate : circ.gates()) {
    psi = apply_gate(std::move(psi), gate);
  }
  return psi;
}

DensityMatrix simulate_noisy(const Circuit& circ, const CalibrationData& calib,
                             const OracleOptions& opts) {
  check_cap(circ, opts);
  // Resolve everything first so a missing record fails before the heavy work.
  std::vector<double> p;
  p.reserve(circ.size());
  for (const auto& gate : circ.gates()) {
    p.push_back(calib.lookup(gate).depolarization);
  }
  DensityMatrix rho(circ.n_qubits());
  const auto gates = circ.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    rho = apply_gate(std::move(rho), gates[i]);
    rho = apply_depolarizing(std::move(rho), gates[i].qubits, p[i]);
  }
  return rho;
}

double simulate_fidelity(const Circuit& circ, const CalibrationData& calib,
                         const OracleOptions& opts) {
  return fidelity_pure_mixed(simulate_ideal(circ, opts),
                             simulate_noisy(circ, calib, opts));
}

} // namespace fidelis::oracle
