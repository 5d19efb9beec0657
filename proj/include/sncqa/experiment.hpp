// Copyright 2026 The sncqa-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sncqa/ansatz.hpp"
#include "sncqa/hamiltonian.hpp"
#include "sncqa/lattice.hpp"
#include "sncqa/vqe.hpp"

namespace sncqa {

struct ExperimentConfig {
  LatticeSpec lattice{2, 2, Boundary::Open};
  double j1 = 1.0;
  double j2_over_j1 = 0.0;
  Convention convention = Convention::Pauli;
  AnsatzSpec ansatz;
  /// `seed` is ignored here; every run takes its seed from `seeds`.
  OptimizerConfig optimizer;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  std::vector<std::uint64_t> shots_list{10, 50, 100, 500, 1000};
  std::filesystem::path output_directory = "results";
  bool write_json = true;
  bool write_csv = true;
  int workers = 1;

  double j2() const { return j1 * j2_over_j1; }
};

/// Strict parse: unknown keys, wrong types and out-of-range values raise
/// ConfigError naming the offending path.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Fully resolved config; parse_config(config_to_json(c)) == c.
nlohmann::json config_to_json(const ExperimentConfig& config);

nlohmann::json run_record_to_json(const RunRecord& record);
/// iteration,energy,grad_norm
std::string trace_csv(const RunRecord& record);

struct CommandOptions {
  std::optional<std::filesystem::path> out_dir;
  std::optional<std::vector<std::uint64_t>> seeds;
  bool require_converged = false;
  int n_max = 100;
  std::string suite = "unfrustrated";
  std::optional<int> workers;
};

enum class CommandStatus : std::uint8_t { Ok, NotConverged };

struct CommandResult {
  CommandStatus status = CommandStatus::Ok;
  nlohmann::json summary;
  std::vector<std::filesystem::path> files;
};

/// Ground-state energy, sector and method; writes exact.json.
CommandResult cmd_exact(const ExperimentConfig& config, const CommandOptions& options);
/// One JSON and one CSV per seed plus summary.json.
CommandResult cmd_vqe(const ExperimentConfig& config, const CommandOptions& options);
/// Built-in suite: unfrustrated, frustrated or noise.
CommandResult cmd_benchmark(const ExperimentConfig& config, const CommandOptions& options);
/// scaling.csv with n, dim_spin0, dim_max, k_max, ratio for even n up to n_max.
CommandResult cmd_scaling(const CommandOptions& options);
/// resources.csv over n in {4, 6, 8, 12, 16}, SnCQA with m = n - 1 and pHEA.
CommandResult cmd_resources(const ExperimentConfig& config, const CommandOptions& options);
/// One vqe sweep per entry of shots_list, outputs tagged by shots.
CommandResult cmd_noise(const ExperimentConfig& config, const CommandOptions& options);

struct PowerFit {
  double coefficient = 0.0;
  double exponent = 0.0;
};

/// Least-squares fit of log y = log c + alpha log x.
PowerFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

/// Lattices used by the resource sweep: 2x2, 2x3, 2x4, 3x4, 4x4.
std::vector<LatticeSpec> resource_lattices();

}  // namespace sncqa
