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
#include <map>
#include <vector>

#include "sncqa/hamiltonian.hpp"
#include "sncqa/rng.hpp"
#include "sncqa/statevector.hpp"

namespace sncqa {

/// basis index -> number of times it was drawn
using Counts = std::map<std::uint64_t, std::uint64_t>;

/// Copy of the state rotated so that a computational-basis measurement reads
/// out the given Pauli axis on every qubit: H for X, S^dagger then H for Y.
StateVector rotate_to_measurement_basis(const StateVector& state, PauliAxis basis);

/// Draws shot indices i.i.d. from |amplitude|^2 of the rotated state by
/// inverse-CDF lookup in a prefix-sum table.
std::vector<std::uint64_t> sample_histogram(const StateVector& state, PauliAxis basis, std::uint64_t shots,
                                            RngStream& rng);
Counts sample_bitstrings(const StateVector& state, PauliAxis basis, std::uint64_t shots, RngStream& rng);

/// Shot-noise estimate of <H> from three settings (all-X, all-Y, all-Z) with
/// `shots` samples each, so 3 * shots samples in total.
double sampled_energy(const HeisenbergHamiltonian& h, const StateVector& state, std::uint64_t shots, RngStream& rng);

}  // namespace sncqa
