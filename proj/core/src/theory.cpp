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

#include "fidelis/theory.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "fidelis/errors.hpp"

namespace fidelis::theory {

DepolParams DepolParams::make(double p, unsigned d) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError("depolarization " + std::to_string(p) + " outside [0,1]");
  }
  if (d < 2 || !std::has_single_bit(d)) {
    throw InputError("dimension " + std::to_string(d) +
                     " is not a power of two >= 2");
  }
  return DepolParams{p, d};
}

double fidelity_after_n(double p, std::uint64_t n, unsigned d) {
  // (1-p)^n underflows to 0 for large n, leaving the 1/d floor.
  const double survive = std::pow(1.0 - p, static_cast<double>(n));
  return survive + (1.0 - survive) / d;
}

double fidelity_step(double f_prev, double p, unsigned d) {
  return (1.0 - p) * f_prev + p / d;
}

double eta(double f_a, double f_b, double p, unsigned d_ab) {
  if (p <= 0.0) {
    return 0.0;
  }
  const double a = std::sqrt(1.0 - p) * (f_a + f_b);
  const double c = 4.0 * p / d_ab;
  return (c / 2.0) / (std::sqrt(a * a + c) + a);
}

FidelityBounds entangled_fidelity_bounds(double p, unsigned d_a) {
  return FidelityBounds{1.0 - p, 1.0 - p + p / d_a};
}

double coherence_factor(double t, double t1, double t2) {
  if (!(t >= 0.0) || !(t1 > 0.0) || !(t2 > 0.0)) {
    throw InputError("coherence needs t >= 0 and positive t1, t2");
  }
  return std::exp(-t / t1) * (0.5 * std::exp(-t / t2) + 0.5);
}

} // namespace fidelis::theory
