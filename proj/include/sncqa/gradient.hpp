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

#include "sncqa/circuit.hpp"
#include "sncqa/hamiltonian.hpp"
#include "sncqa/rng.hpp"

namespace sncqa {

struct EnergyGradient {
  double energy = 0.0;
  std::vector<double> gradient;
};

/// Exact dE/dtheta by one forward and one backward sweep. A parameter bound
/// to several gates collects the sum of their contributions.
EnergyGradient adjoint_gradient(const ParamCircuit& circuit, std::span<const double> params,
                                const HeisenbergHamiltonian& h, const StateVector& init);

/// Scalar energy estimate of a prepared state.
using EnergyEstimator = std::function<double(const StateVector&)>;

/// Two-term shift rule per bound gate: shift pi/4 with coefficient 1 for the
/// exchange gate, shift pi/2 with coefficient 1/2 for single-qubit rotations.
/// Throws InvalidArgument for any other parameterized gate.
std::vector<double> parameter_shift_gradient(const ParamCircuit& circuit, std::span<const double> params,
                                             const StateVector& init, const EnergyEstimator& estimate);

/// Shift rule with exact expectations.
std::vector<double> parameter_shift_gradient(const ParamCircuit& circuit, std::span<const double> params,
                                             const HeisenbergHamiltonian& h, const StateVector& init);

/// Shift rule with shot-noise energies (`shots` per measurement setting).
std::vector<double> parameter_shift_gradient(const ParamCircuit& circuit, std::span<const double> params,
                                             const HeisenbergHamiltonian& h, const StateVector& init,
                                             std::uint64_t shots, RngStream& rng);

}  // namespace sncqa
