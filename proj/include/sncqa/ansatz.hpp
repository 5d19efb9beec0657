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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sncqa/circuit.hpp"
#include "sncqa/lattice.hpp"
#include "sncqa/statevector.hpp"

namespace sncqa {

/// Young-Jucys-Murphy element X_k = sum_{j<k} (j k) of S_n, labelled by its
/// 1-based index k in [2, n]. Transpositions are stored as 0-based chain
/// positions (j - 1, k - 1), ascending in j.
struct YjmElement {
  int k = 2;
  std::vector<std::pair<int, int>> transpositions;
};

YjmElement yjm_element(int k);

/// m distinct YJM labels drawn from {2, ..., n} without replacement, sorted.
std::vector<int> sample_yjm_indices(int n, int m, std::uint64_t seed);

struct SnCQAConfig {
  int layers = 1;
  /// YJM elements kept in every mixer; n - 1 keeps all of them.
  int yjm_sample_count = 1;
  int trotter_slices = 1;
  std::uint64_t seed = 0;
  /// One parameter per lattice-symmetry orbit of matching bonds instead of
  /// one per gate. Off in the benchmarks.
  bool share_orbit_params = false;
};

struct PheaConfig {
  int layers = 1;
};

/// Chain pairs of the exchange layer for a 1-based layer index. Odd layers
/// take (1,2),(3,4),... closed by (n-1, 0) for even n; even layers take
/// (0,1),(2,3),.... Both have floor(n/2) disjoint pairs. The first layer is
/// offset from the singlet pairs of the initial state, on which an exchange
/// gate only contributes a phase.
std::vector<std::pair<int, int>> layer_matching(int n, int layer);

/// Alternating exchange and YJM-mixer layers on the snake chain. Every gate is
/// an exchange gate, so the circuit commutes with total S^2 and S_z.
ParamCircuit build_sncqa(const Lattice& lattice, const SnCQAConfig& config);

/// Z-Y-Z Euler rotations on every qubit followed by a CNOT ladder along the
/// snake chain, repeated per layer. 3 n p parameters.
ParamCircuit build_phea(const Lattice& lattice, const PheaConfig& config);
ParamCircuit build_phea(int n, const PheaConfig& config);

/// Gate sequence preparing (n - 2S)/2 singlets on consecutive chain pairs,
/// with the trailing 2S chain positions left in |0>. Per pair: X, X, H, CNOT.
ParamCircuit sector_init_circuit(std::span<const int> chain, double total_spin);

/// Singlet product on qubit pairs (0,1), (2,3), ...; the lattice overloads
/// pair consecutive positions of the snake chain instead.
StateVector prepare_singlet_init(int n);
StateVector prepare_singlet_init(const Lattice& lattice);
StateVector prepare_sector_init(int n, double total_spin);
StateVector prepare_sector_init(const Lattice& lattice, double total_spin);

enum class AnsatzType : std::uint8_t { SnCQA, PHEA };

std::string ansatz_name(AnsatzType type);
AnsatzType ansatz_from_name(const std::string& name);

/// Lattice-independent ansatz hyperparameters as they appear in configs.
struct AnsatzSpec {
  AnsatzType type = AnsatzType::SnCQA;
  int layers = 1;
  std::optional<int> yjm_sample_count;  // unset: n - 1
  int trotter_slices = 1;
  bool share_orbit_params = false;
  double init_total_spin = 0.0;
  /// Seed for the YJM draw; unset: the run seed.
  std::optional<std::uint64_t> yjm_seed;
};

ParamCircuit build_ansatz(const Lattice& lattice, const AnsatzSpec& spec, std::uint64_t seed);

/// Parameter count the construction will produce, without building it.
int expected_param_count(const Lattice& lattice, const AnsatzSpec& spec);

}  // namespace sncqa
