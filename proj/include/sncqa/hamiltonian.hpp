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
#include <functional>
#include <span>
#include <vector>

#include "sncqa/lattice.hpp"
#include "sncqa/statevector.hpp"

namespace sncqa {

/// Pauli: each bond contributes J (XX + YY + ZZ). Spin: J S_i.S_j, a quarter of that.
enum class Convention : std::uint8_t { Pauli, Spin };

struct HamiltonianTerm {
  double coefficient = 0.0;
  Edge edge;
};

/// Heisenberg J1-J2 model: sum over bonds of J_e * sigma_a . sigma_b.
/// Coefficients already include the convention factor.
struct HeisenbergHamiltonian {
  int num_qubits = 0;
  std::vector<HamiltonianTerm> terms;
  Convention convention = Convention::Pauli;
};

/// Bonds with a zero coupling are dropped.
HeisenbergHamiltonian build_hamiltonian(const Lattice& lattice, double j1, double j2,
                                        Convention convention = Convention::Pauli);

/// out = H in. Uses sigma.sigma = 2 SWAP - I on every bond.
void apply_hamiltonian(const HeisenbergHamiltonian& h, std::span<const Complex> in, std::span<Complex> out);
StateVector apply_hamiltonian(const HeisenbergHamiltonian& h, const StateVector& state);

/// <psi|H|psi> for a normalized state.
double expectation(const HeisenbergHamiltonian& h, const StateVector& state);

/// <psi|S^2|psi> with S the total spin in spin-1/2 units.
double total_spin_sq_expectation(const StateVector& state);
/// <psi|S_z|psi>; qubit value 0 is spin up.
double total_sz_expectation(const StateVector& state);

struct PauliTerm {
  double coefficient = 0.0;
  int q0 = 0;
  int q1 = 0;
  PauliAxis axis = PauliAxis::Z;
};

/// Three entries (X, Y, Z) per bond, in bond order.
std::vector<PauliTerm> pauli_term_list(const HeisenbergHamiltonian& h);

enum class EigenMethod : std::uint8_t { Dense, Lanczos };

struct GroundTruth {
  double energy = 0.0;
  double sz_sector = 0.0;
  EigenMethod method = EigenMethod::Dense;
};

/// Sectors up to this dimension are solved densely; Lanczos above.
inline constexpr std::size_t kDenseSectorLimit = 4096;
inline constexpr int kMaxExactQubits = 16;

/// Minimum over all fixed-magnetization sectors of the lowest eigenvalue.
/// Ties between sectors resolve to the smallest |Sz|, then positive Sz.
GroundTruth exact_ground_energy(const HeisenbergHamiltonian& h);

/// Lowest eigenvalue of the block with the given number of flipped spins.
double sector_ground_energy(const HeisenbergHamiltonian& h, int hamming_weight, EigenMethod* method_used = nullptr);

/// All basis indices with the given popcount, ascending.
std::vector<std::uint64_t> sector_basis(int num_qubits, int hamming_weight);

/// Dense real symmetric block of H on a sector basis (row-major, dim x dim).
std::vector<double> sector_matrix(const HeisenbergHamiltonian& h, std::span<const std::uint64_t> basis);

struct LanczosResult {
  double eigenvalue = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Lowest eigenpair of a real symmetric operator given as a matvec, with full
/// reorthogonalization. Stops once the Ritz residual falls below tol.
LanczosResult lanczos_lowest(std::size_t dim,
                             const std::function<void(std::span<const double>, std::span<double>)>& matvec,
                             double tol = 1e-10, int max_iters = 400, std::uint64_t seed = 7);

}  // namespace sncqa
