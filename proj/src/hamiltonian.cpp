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

#include "sncqa/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "sncqa/error.hpp"

namespace sncqa {

namespace {

inline std::size_t swap_bits(std::size_t idx, std::size_t mask) {
  // mask has exactly the two bond bits set; flip both only when they differ.
  const std::size_t both = idx & mask;
  return (both == 0 || both == mask) ? idx : idx ^ mask;
}

void require_normalized(const StateVector& state) {
  const double dev = std::abs(state.norm_squared() - 1.0);
  if (dev > 1e-8) {
    throw InvalidArgument("state is not normalized (|norm^2 - 1| = " + std::to_string(dev) + ")");
  }
}

}  // namespace

HeisenbergHamiltonian build_hamiltonian(const Lattice& lattice, double j1, double j2, Convention convention) {
  HeisenbergHamiltonian h;
  h.num_qubits = lattice.num_sites();
  h.convention = convention;
  const double scale = convention == Convention::Pauli ? 1.0 : 0.25;
  for (auto [kind, j] : {std::pair{EdgeKind::NearestNeighbor, j1}, std::pair{EdgeKind::NextNearestNeighbor, j2}}) {
    if (j == 0.0) continue;
    for (const auto& e : lattice.edges(kind)) h.terms.push_back({scale * j, e});
  }
  return h;
}

void apply_hamiltonian(const HeisenbergHamiltonian& h, std::span<const Complex> in, std::span<Complex> out) {
  const std::size_t dim = std::size_t{1} << h.num_qubits;
  if (in.size() != dim || out.size() != dim) {
    throw DimensionMismatch("Hamiltonian on " + std::to_string(h.num_qubits) + " qubits applied to a vector of size " +
                            std::to_string(in.size()));
  }
  std::vector<std::size_t> masks;
  std::vector<double> twice_j;
  double diag_shift = 0.0;
  for (const auto& t : h.terms) {
    masks.push_back((std::size_t{1} << t.edge.a) | (std::size_t{1} << t.edge.b));
    twice_j.push_back(2.0 * t.coefficient);
    diag_shift -= t.coefficient;
  }
  for (std::size_t idx = 0; idx < dim; ++idx) {
    Complex acc = diag_shift * in[idx];
    for (std::size_t t = 0; t < masks.size(); ++t) acc += twice_j[t] * in[swap_bits(idx, masks[t])];
    out[idx] = acc;
  }
}

StateVector apply_hamiltonian(const HeisenbergHamiltonian& h, const StateVector& state) {
  StateVector out(state.num_qubits());
  apply_hamiltonian(h, state.amplitudes(), out.amplitudes());
  return out;
}

double expectation(const HeisenbergHamiltonian& h, const StateVector& state) {
  require_normalized(state);
  const auto hpsi = apply_hamiltonian(h, state);
  const Complex e = state.inner(hpsi);
  if (std::abs(e.imag()) >= 1e-10) throw Error("expectation value has a non-negligible imaginary part");
  return e.real();
}

double total_spin_sq_expectation(const StateVector& state) {
  const int n = state.num_qubits();
  const auto amps = state.amplitudes();
  // S^2 = (3n/4) I + 1/2 sum_{i<j} (2 SWAP_ij - I)
  double acc = 0.75 * n - 0.25 * n * (n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
      Complex s{};
      for (std::size_t idx = 0; idx < amps.size(); ++idx) s += std::conj(amps[idx]) * amps[swap_bits(idx, mask)];
      acc += s.real();
    }
  }
  return acc;
}

double total_sz_expectation(const StateVector& state) {
  const int n = state.num_qubits();
  const auto amps = state.amplitudes();
  double acc = 0.0;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    acc += std::norm(amps[idx]) * (0.5 * n - std::popcount(idx));
  }
  return acc;
}

std::vector<PauliTerm> pauli_term_list(const HeisenbergHamiltonian& h) {
  std::vector<PauliTerm> out;
  out.reserve(3 * h.terms.size());
  for (const auto& t : h.terms) {
    for (auto axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) out.push_back({t.coefficient, t.edge.a, t.edge.b, axis});
  }
  return out;
}

}  // namespace sncqa
