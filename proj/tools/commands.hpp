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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fidelis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUnsupported = 2;

struct ModelFlags {
  double p_ent{0.5};
  double w{0.5};
  bool coherence{false};
  bool measurement{false};
};

struct EstimateArgs {
  std::filesystem::path qasm;
  std::filesystem::path calibration;
  std::string method{"proposed"};
  ModelFlags model;
  std::optional<std::filesystem::path> out;
};

struct SimulateArgs {
  std::filesystem::path qasm;
  std::filesystem::path calibration;
  std::size_t oracle_cap{10};
  std::optional<std::filesystem::path> out;
};

struct CompareArgs {
  std::filesystem::path qasm;
  std::filesystem::path calibration;
  ModelFlags model;
  bool with_oracle{false};
  std::size_t oracle_cap{10};
  std::optional<std::filesystem::path> out;
};

struct SweepArgs {
  std::string family;
  std::optional<std::filesystem::path> qasm;
  std::string n_spec;
  std::string p1_spec{"0"};
  std::string p2_spec{"0"};
  double p_ent{0.5};
  std::size_t threads{1};
  std::optional<std::filesystem::path> out;
};

struct ThresholdArgs {
  std::string family{"ghz"};
  std::size_t n_min{2};
  std::size_t n_max{50};
  double p1{0.0};
  double target{0.99};
  double p_ent{0.5};
  std::optional<std::filesystem::path> out;
};

struct MetricsArgs {
  std::filesystem::path records;
  std::optional<std::filesystem::path> out;
};

struct GenerateArgs {
  std::string family{"ghz"};
  std::size_t n{2};
  std::size_t gates{100};
  double two_qubit_fraction{0.3};
  std::optional<std::uint64_t> seed;
  bool mirror{false};
  bool measure{false};
  std::optional<std::filesystem::path> out;
};

int cmd_estimate(const EstimateArgs& args);
int cmd_simulate(const SimulateArgs& args);
int cmd_compare(const CompareArgs& args);
int cmd_sweep(const SweepArgs& args);
int cmd_threshold(const ThresholdArgs& args);
int cmd_metrics(const MetricsArgs& args);
int cmd_generate(const GenerateArgs& args);

/// "2..5" or "2,3,8".
std::vector<std::size_t> parse_count_list(const std::string& spec);
/// "0,1e-6,2e-6" or "lin:start:stop:count".
std::vector<double> parse_value_list(const std::string& spec);

/// Writes to `path` via a sibling temporary file and rename, or to stdout
/// when no path is given.
void emit(const std::optional<std::filesystem::path>& path,
          const std::string& content);

} // namespace fidelis::cli
