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

#include "sncqa/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sncqa/error.hpp"
#include "sncqa/rng.hpp"

namespace sncqa {

YjmElement yjm_element(int k) {
  if (k < 2) throw InvalidArgument("YJM elements start at k = 2");
  YjmElement x;
  x.k = k;
  for (int j = 1; j < k; ++j) x.transpositions.emplace_back(j - 1, k - 1);
  return x;
}

std::vector<int> sample_yjm_indices(int n, int m, std::uint64_t seed) {
  if (m < 1 || m > n - 1) {
    throw InvalidArgument("YJM sample count must lie in [1, " + std::to_string(n - 1) + "], got " + std::to_string(m));
  }
  std::vector<int> pool(n - 1);
  std::iota(pool.begin(), pool.end(), 2);
  // Stream 1 keeps the YJM draw independent of parameter initialization.
  RngStream rng(seed, 1);
  for (int i = 0; i < m; ++i) {
    auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(pool.size() - i)));
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> out(pool.begin(), pool.begin() + m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> layer_matching(int n, int layer) {
  std::vector<std::pair<int, int>> out;
  if (layer % 2 == 0) {
    for (int q = 0; q + 1 < n; q += 2) out.emplace_back(q, q + 1);
  } else {
    for (int q = 1; q + 1 < n; q += 2) out.emplace_back(q, q + 1);
    if (n % 2 == 0) out.emplace_back(n - 1, 0);
  }
  return out;
}

ParamCircuit build_sncqa(const Lattice& lattice, const SnCQAConfig& config) {
  const int n = lattice.num_sites();
  if (config.layers < 1) throw InvalidArgument("SnCQA needs at least one layer");
  if (config.trotter_slices < 1) throw InvalidArgument("Trotter slice count must be positive");
  const auto chain = snake_ordering(lattice);
  const auto sample = sample_yjm_indices(n, config.yjm_sample_count, config.seed);

  // Orbit label per lattice bond, used only in shared-parameter mode.
  std::map<Edge, int> orbit_label;
  if (config.share_orbit_params) {
    const auto group = lattice_symmetry_group(lattice);
    int next = 0;
    for (auto kind : {EdgeKind::NearestNeighbor, EdgeKind::NextNearestNeighbor}) {
      for (const auto& orbit : edge_orbits(lattice, group.elements, kind).orbits) {
        for (const auto& e : orbit) orbit_label[e] = next;
        ++next;
      }
    }
  }

  ParamCircuit circuit(n);
  const double slice_scale = 1.0 / config.trotter_slices;
  for (int layer = 1; layer <= config.layers; ++layer) {
    std::map<int, int> param_of_orbit;
    for (auto [p, q] : layer_matching(n, layer)) {
      const int a = chain[p], b = chain[q];
      int param = -1;
      if (config.share_orbit_params) {
        Edge e{std::min(a, b), std::max(a, b), EdgeKind::NearestNeighbor};
        if (!lattice.adjacent(a, b, EdgeKind::NearestNeighbor)) e.kind = EdgeKind::NextNearestNeighbor;
        auto it = orbit_label.find(e);
        if (it != orbit_label.end()) {
          auto [slot, fresh] = param_of_orbit.try_emplace(it->second, -1);
          if (fresh) slot->second = circuit.new_parameter();
          param = slot->second;
        }
      }
      if (param < 0) param = circuit.new_parameter();
      circuit.add(eswap(a, b, 0.0), {param, 1.0});
    }
    std::vector<int> beta;
    for (std::size_t s = 0; s < sample.size(); ++s) beta.push_back(circuit.new_parameter());
    for (int slice = 0; slice < config.trotter_slices; ++slice) {
      for (std::size_t s = 0; s < sample.size(); ++s) {
        for (auto [j, k] : yjm_element(sample[s]).transpositions) {
          circuit.add(eswap(chain[j], chain[k], 0.0), {beta[s], slice_scale});
        }
      }
    }
  }
  return circuit;
}

namespace {

ParamCircuit phea_on_chain(std::span<const int> chain, const PheaConfig& config) {
  if (config.layers < 1) throw InvalidArgument("pHEA needs at least one layer");
  const int n = static_cast<int>(chain.size());
  if (n < 2) throw InvalidArgument("pHEA needs at least two qubits");
  ParamCircuit circuit(n);
  for (int layer = 0; layer < config.layers; ++layer) {
    for (int q : chain) {
      for (auto axis : {PauliAxis::Z, PauliAxis::Y, PauliAxis::Z}) {
        circuit.add(rotation(axis, q, 0.0), {circuit.new_parameter(), 1.0});
      }
    }
    for (int p = 0; p + 1 < n; ++p) circuit.add(Gate{GateKind::CNOT, chain[p], chain[p + 1]});
  }
  return circuit;
}

std::vector<int> identity_chain(int n) {
  std::vector<int> chain(n);
  std::iota(chain.begin(), chain.end(), 0);
  return chain;
}

}  // namespace

ParamCircuit build_phea(const Lattice& lattice, const PheaConfig& config) {
  return phea_on_chain(snake_ordering(lattice), config);
}

ParamCircuit build_phea(int n, const PheaConfig& config) { return phea_on_chain(identity_chain(n), config); }

ParamCircuit sector_init_circuit(std::span<const int> chain, double total_spin) {
  const int n = static_cast<int>(chain.size());
  const double pairs_real = (n - 2.0 * total_spin) / 2.0;
  if (total_spin < 0.0 || pairs_real < 0.0 || std::floor(pairs_real) != pairs_real) {
    throw InvalidArgument("total spin " + std::to_string(total_spin) + " is not reachable with " + std::to_string(n) +
                          " spins");
  }
  const int pairs = static_cast<int>(pairs_real);
  ParamCircuit circuit(n);
  for (int p = 0; p < pairs; ++p) {
    const int a = chain[2 * p], b = chain[2 * p + 1];
    // |00> -> |11> -> (|0> - |1>)|1>/sqrt2 -> (|01> - |10>)/sqrt2
    circuit.add(Gate{GateKind::X, a});
    circuit.add(Gate{GateKind::X, b});
    circuit.add(Gate{GateKind::H, a});
    circuit.add(Gate{GateKind::CNOT, a, b});
  }
  return circuit;
}

StateVector prepare_singlet_init(int n) {
  if (n % 2 != 0) throw InvalidArgument("singlet initialization needs an even number of qubits");
  return prepare_sector_init(n, 0.0);
}

StateVector prepare_singlet_init(const Lattice& lattice) {
  if (lattice.num_sites() % 2 != 0) throw InvalidArgument("singlet initialization needs an even number of qubits");
  return prepare_sector_init(lattice, 0.0);
}

StateVector prepare_sector_init(int n, double total_spin) {
  const auto chain = identity_chain(n);
  StateVector s(n);
  sector_init_circuit(chain, total_spin).apply(s, {});
  return s;
}

StateVector prepare_sector_init(const Lattice& lattice, double total_spin) {
  const auto chain = snake_ordering(lattice);
  StateVector s(lattice.num_sites());
  sector_init_circuit(chain, total_spin).apply(s, {});
  return s;
}

std::string ansatz_name(AnsatzType type) { return type == AnsatzType::SnCQA ? "sncqa" : "phea"; }

AnsatzType ansatz_from_name(const std::string& name) {
  if (name == "sncqa") return AnsatzType::SnCQA;
  if (name == "phea") return AnsatzType::PHEA;
  throw InvalidArgument("unknown ansatz type: " + name);
}

ParamCircuit build_ansatz(const Lattice& lattice, const AnsatzSpec& spec, std::uint64_t seed) {
  if (spec.type == AnsatzType::PHEA) return build_phea(lattice, PheaConfig{spec.layers});
  SnCQAConfig cfg;
  cfg.layers = spec.layers;
  cfg.yjm_sample_count = spec.yjm_sample_count.value_or(lattice.num_sites() - 1);
  cfg.trotter_slices = spec.trotter_slices;
  cfg.seed = spec.yjm_seed.value_or(seed);
  cfg.share_orbit_params = spec.share_orbit_params;
  return build_sncqa(lattice, cfg);
}

int expected_param_count(const Lattice& lattice, const AnsatzSpec& spec) {
  const int n = lattice.num_sites();
  if (spec.type == AnsatzType::PHEA) return 3 * n * spec.layers;
  if (spec.share_orbit_params) return build_ansatz(lattice, spec, 0).param_count();
  return (n / 2 + spec.yjm_sample_count.value_or(n - 1)) * spec.layers;
}

}  // namespace sncqa
