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

#include <cstdint>
#include <utility>

namespace fidelis::theory {

/// Parameters of a depolarizing channel rho -> (1-p) rho + (p/d) I on a
/// d-dimensional system.
struct DepolParams {
  double p{0.0};
  unsigned d{2};

  /// Throws InputError unless 0 <= p <= 1 and d is a power of two >= 2.
  static DepolParams make(double p, unsigned d);
};

/// Fidelity of a pure state with itself after n channel applications:
/// (1-p)^n + (1 - (1-p)^n)/d.
double fidelity_after_n(double p, std::uint64_t n, unsigned d);

/// One more channel on an already depolarized state: (1-p) f + p/d.
double fidelity_step(double f_prev, double p, unsigned d);

/// Non-negative correction that splits the fidelity of a two-qubit channel
/// across both qubits:
///   (sqrt(1-p) f_a + eta)(sqrt(1-p) f_b + eta) = (1-p) f_a f_b + p/d_ab.
/// Evaluated as (2p/d)/(sqrt(A^2 + 4p/d) + A), A = sqrt(1-p)(f_a+f_b), which
/// stays accurate for tiny p.
double eta(double f_a, double f_b, double p, unsigned d_ab = 4);

struct FidelityBounds {
  double lower{1.0};
  double upper{1.0};
};

/// Fidelity window for depolarizing subsystem A of a pure joint state:
/// [1-p, 1-p + p/d_a]. The lower end is reached for maximal entanglement,
/// the upper for product states.
FidelityBounds entangled_fidelity_bounds(double p, unsigned d_a);

/// Worst-case T1/T2 decay over an interval t (all in the same time unit):
/// exp(-t/t1) * (exp(-t/t2)/2 + 1/2). Throws InputError unless t >= 0 and
/// t1, t2 > 0.
double coherence_factor(double t, double t1, double t2);

} // namespace fidelis::theory
