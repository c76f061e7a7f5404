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

#include "fidelis/exploration.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "fidelis/errors.hpp"

namespace fidelis {

CircuitFamily CircuitFamily::ghz() { return {"ghz", generate_ghz}; }

CircuitFamily CircuitFamily::qft() { return {"qft", generate_qft}; }

CircuitFamily CircuitFamily::by_name(const std::string& name) {
  if (name == "ghz") {
    return ghz();
  }
  if (name == "qft") {
    return qft();
  }
  throw InputError("unknown circuit family '" + name + "' (expected ghz or qft)");
}

CircuitFamily CircuitFamily::fixed(std::string name, Circuit circ) {
  return {std::move(name), [circ = std::move(circ)](std::size_t n) {
            if (n != circ.n_qubits()) {
              throw InputError("fixed circuit has " +
                               std::to_string(circ.n_qubits()) +
                               " qubits, requested " + std::to_string(n));
            }
            return circ;
          }};
}

namespace {

double proposed_value(const Circuit& circ, double p1, double p2,
                      const EstimatorConfig& cfg) {
  return estimate_proposed(circ, CalibrationData::uniform(p1, p2), cfg).value;
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError(std::string(what) + " value " + std::to_string(p) +
                     " outside [0,1]");
  }
}

} // namespace

SweepResult sweep_grid(const CircuitFamily& family,
                       std::span<const std::size_t> n_values,
                       std::span<const double> p1_values,
                       std::span<const double> p2_values,
                       const EstimatorConfig& cfg, std::size_t threads) {
  if (cfg.include_coherence) {
    throw InputError("sweeps model gate errors only; disable coherence");
  }
  cfg.validate();
  std::vector<std::size_t> ns(n_values.begin(), n_values.end());
  std::vector<double> p1s(p1_values.begin(), p1_values.end());
  std::vector<double> p2s(p2_values.begin(), p2_values.end());
  for (double p : p1s) check_probability(p, "p1");
  for (double p : p2s) check_probability(p, "p2");
  std::sort(ns.begin(), ns.end());
  std::sort(p1s.begin(), p1s.end());
  std::sort(p2s.begin(), p2s.end());

  std::vector<Circuit> circuits;
  circuits.reserve(ns.size());
  for (auto n : ns) {
    circuits.push_back(family.make(n));
  }

  SweepResult result;
  result.rows.resize(ns.size() * p1s.size() * p2s.size());
  for (std::size_t a = 0, i = 0; a < ns.size(); ++a) {
    for (double p1 : p1s) {
      for (double p2 : p2s) {
        result.rows[i++] = SweepRow{family.name, ns[a], p1, p2, 0.0};
      }
    }
  }

  const std::size_t per_circuit = p1s.size() * p2s.size();
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto& row = result.rows[i];
      row.fidelity =
          proposed_value(circuits[i / per_circuit], row.p1, row.p2, cfg);
    }
  };

  const std::size_t total = result.rows.size();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(total, 1));
  if (threads == 1) {
    work(0, total);
    return result;
  }
  std::vector<std::exception_ptr> failures(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(total, t * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      pool.emplace_back([&, t, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) {
      std::rethrow_exception(f);
    }
  }
  return result;
}

ThresholdResult threshold_p2(const Circuit& circ, double p1, double target,
                             const EstimatorConfig& cfg) {
  if (cfg.include_coherence) {
    throw InputError("threshold search models gate errors only; disable coherence");
  }
  check_probability(p1, "p1");
  if (!(target > 0.0 && target < 1.0)) {
    return {std::nullopt, "target must lie strictly between 0 and 1"};
  }
  constexpr double kBracket = 0.5;
  if (proposed_value(circ, p1, 0.0, cfg) < target) {
    return {std::nullopt, "target unreachable even at p2=0"};
  }
  if (proposed_value(circ, p1, kBracket, cfg) >= target) {
    return {kBracket, {}};
  }
  double lo = 0.0;
  double hi = kBracket;
  for (int iter = 0; iter < 400 && hi - lo > 1e-7 * hi; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (proposed_value(circ, p1, mid, cfg) >= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (lo < p1) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "required p2 %.6g fell below p1 %.6g", lo, p1);
    return {std::nullopt, buf};
  }
  return {lo, {}};
}

ThresholdResult threshold_p2(const CircuitFamily& family, std::size_t n,
                             double p1, double target,
                             const EstimatorConfig& cfg) {
  return threshold_p2(family.make(n), p1, target, cfg);
}

std::vector<ThresholdRow> threshold_curve(const CircuitFamily& family,
                                          std::size_t n_min, std::size_t n_max,
                                          double p1, double target,
                                          const EstimatorConfig& cfg) {
  std::vector<ThresholdRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    rows.push_back(ThresholdRow{family.name, n, p1, target,
                                threshold_p2(family, n, p1, target, cfg)});
    if (!rows.back().result.feasible()) {
      break;
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "circuit_family,n_qubits,p1,p2,fidelity\n";
  char buf[128];
  for (const auto& r : result.rows) {
    std::snprintf(buf, sizeof buf, ",%zu,%.17g,%.17g,%.17g\n", r.n_qubits,
                  r.p1, r.p2, r.fidelity);
    out << r.circuit_family << buf;
  }
}

void write_threshold_csv(std::ostream& out,
                         std::span<const ThresholdRow> rows) {
  out << "circuit_family,n_qubits,p1,target,p2,status\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, ",%zu,%.17g,%.17g,", r.n_qubits, r.p1,
                  r.target);
    out << r.circuit_family << buf;
    if (r.result.feasible()) {
      std::snprintf(buf, sizeof buf, "%.17g,ok\n", *r.result.p2);
      out << buf;
    } else {
      out << ",infeasible: " << r.result.reason << '\n';
    }
  }
}

} // namespace fidelis
