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

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "commands.hpp"
#include "fidelis/errors.hpp"

namespace {

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("fidelis");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("FIDELIS_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

void add_model_flags(CLI::App* cmd, fidelis::cli::ModelFlags& flags) {
  cmd->add_option("--p-ent", flags.p_ent, "Entanglement hyperparameter of the proposed model")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--w", flags.w, "QVA cross-error weight")->check(CLI::Range(0.0, 1.0));
  cmd->add_flag("--coherence", flags.coherence, "Apply per-layer T1/T2 decay");
  cmd->add_flag("--measurement", flags.measurement, "Include readout fidelities");
}

} // namespace

int main(int argc, char** argv) {
  using namespace fidelis::cli;
  setup_logging();

  CLI::App app{"fidelis: fidelity prediction for quantum circuits under depolarizing noise"};
  app.require_subcommand(1);

  EstimateArgs estimate;
  auto* est = app.add_subcommand("estimate", "Predict circuit fidelity with one estimator");
  est->add_option("qasm", estimate.qasm, "OpenQASM 2.0 circuit")->required();
  est->add_option("calibration", estimate.calibration, "Calibration JSON")->required();
  est->add_option("--method", estimate.method, "proposed | esp | qva")
      ->check(CLI::IsMember({"proposed", "esp", "qva"}));
  add_model_flags(est, estimate.model);
  est->add_option("--out", estimate.out, "Output path (default stdout)");

  SimulateArgs simulate;
  auto* sim = app.add_subcommand("simulate", "Exact density-matrix fidelity");
  sim->add_option("qasm", simulate.qasm)->required();
  sim->add_option("calibration", simulate.calibration)->required();
  sim->add_option("--oracle-cap", simulate.oracle_cap, "Largest simulated register");
  sim->add_option("--out", simulate.out);

  CompareArgs compare;
  auto* cmp = app.add_subcommand("compare", "Run every estimator (and optionally the oracle)");
  cmp->add_option("qasm", compare.qasm)->required();
  cmp->add_option("calibration", compare.calibration)->required();
  add_model_flags(cmp, compare.model);
  cmp->add_flag("--with-oracle", compare.with_oracle, "Add the exact simulation row");
  cmp->add_option("--oracle-cap", compare.oracle_cap);
  cmp->add_option("--out", compare.out);

  SweepArgs sweep;
  auto* swp = app.add_subcommand("sweep", "Fidelity over a (p1, p2, n) grid");
  swp->add_option("--family", sweep.family, "ghz | qft (or a label for --qasm)");
  swp->add_option("--qasm", sweep.qasm, "Sweep a fixed circuit instead of a family");
  swp->add_option("--n", sweep.n_spec, "Qubit counts: 2..8 or 2,4,8");
  swp->add_option("--p1", sweep.p1_spec, "Values: 0,1e-6 or lin:start:stop:count");
  swp->add_option("--p2", sweep.p2_spec, "Values: 0,1e-5 or lin:start:stop:count");
  swp->add_option("--p-ent", sweep.p_ent)->check(CLI::Range(0.0, 1.0));
  swp->add_option("--threads", sweep.threads)->check(CLI::PositiveNumber);
  swp->add_option("--out", sweep.out);

  ThresholdArgs threshold;
  auto* thr = app.add_subcommand("threshold", "Required p2 for a target fidelity");
  thr->add_option("--family", threshold.family, "ghz | qft");
  thr->add_option("--n-min", threshold.n_min);
  thr->add_option("--n-max", threshold.n_max);
  thr->add_option("--p1", threshold.p1)->check(CLI::Range(0.0, 1.0));
  thr->add_option("--target", threshold.target);
  thr->add_option("--p-ent", threshold.p_ent)->check(CLI::Range(0.0, 1.0));
  thr->add_option("--out", threshold.out);

  MetricsArgs metrics;
  auto* met = app.add_subcommand("metrics", "Regression metrics per method");
  met->add_option("records", metrics.records, "Prediction record CSV")->required();
  met->add_option("--out", metrics.out);

  GenerateArgs generate;
  auto* gen = app.add_subcommand("generate", "Emit a benchmark circuit as OpenQASM");
  gen->add_option("--family", generate.family, "ghz | qft | random");
  gen->add_option("--n", generate.n, "Qubit count")->check(CLI::PositiveNumber);
  gen->add_option("--gates", generate.gates, "Gate count (random)");
  gen->add_option("--two-qubit-fraction", generate.two_qubit_fraction)
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", generate.seed, "Required for random circuits");
  gen->add_flag("--mirror", generate.mirror, "Append the inverse circuit");
  gen->add_flag("--measure", generate.measure, "Measure every qubit");
  gen->add_option("--out", generate.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*est) return cmd_estimate(estimate);
    if (*sim) return cmd_simulate(simulate);
    if (*cmp) return cmd_compare(compare);
    if (*swp) return cmd_sweep(sweep);
    if (*thr) return cmd_threshold(threshold);
    if (*met) return cmd_metrics(metrics);
    if (*gen) return cmd_generate(generate);
  } catch (const fidelis::UnsupportedError& e) {
    spdlog::error("{}", e.what());
    return kExitUnsupported;
  } catch (const fidelis::Error& e) {
    spdlog::error("{}", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitInput;
  }
  return kExitInput;
}
