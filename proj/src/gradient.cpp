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

#include "sncqa/gradient.hpp"

#include <numbers>

#include "sncqa/error.hpp"
#include "sncqa/measurement.hpp"

namespace sncqa {

EnergyGradient adjoint_gradient(const ParamCircuit& circuit, std::span<const double> params,
                                const HeisenbergHamiltonian& h, const StateVector& init) {
  if (h.num_qubits != circuit.num_qubits()) throw DimensionMismatch("Hamiltonian and circuit widths differ");
  const auto gates = circuit.bound_gates(params);
  const auto& bindings = circuit.bindings();

  StateVector psi = init;
  for (const auto& g : gates) apply_gate(psi, g);
  StateVector lambda = apply_hamiltonian(h, psi);

  EnergyGradient out;
  out.energy = psi.inner(lambda).real();
  out.gradient.assign(circuit.param_count(), 0.0);
  if (circuit.param_count() == 0) {
    out.gradient.clear();
    return out;
  }

  // With U = exp(-i a G): dE/da = 2 Im <lambda_k| G |psi_k>, where psi_k is
  // the state right after gate k and lambda_k the back-propagated H psi.
  StateVector mu(psi.num_qubits());
  for (std::size_t k = gates.size(); k-- > 0;) {
    if (bindings[k]) {
      mu = psi;
      apply_generator(mu, gates[k]);
      const double d = 2.0 * lambda.inner(mu).imag();
      out.gradient[bindings[k]->param] += bindings[k]->scale * d;
    }
    apply_gate_inverse(psi, gates[k]);
    apply_gate_inverse(lambda, gates[k]);
  }
  return out;
}

std::vector<double> parameter_shift_gradient(const ParamCircuit& circuit, std::span<const double> params,
                                             const StateVector& init, const EnergyEstimator& estimate) {
  auto gates = circuit.bound_gates(params);
  const auto& bindings = circuit.bindings();
  std::vector<double> grad(circuit.param_count(), 0.0);

  auto evaluate = [&]() {
    StateVector s = init;
    for (const auto& g : gates) apply_gate(s, g);
    return estimate(s);
  };

  for (std::size_t k = 0; k < gates.size(); ++k) {
    if (!bindings[k]) continue;
    double shift = 0.0, coeff = 0.0;
    switch (gates[k].kind) {
      case GateKind::ESwap:
        shift = std::numbers::pi / 4.0;
        coeff = 1.0;
        break;
      case GateKind::RX:
      case GateKind::RY:
      case GateKind::RZ:
        shift = std::numbers::pi / 2.0;
        coeff = 0.5;
        break;
      default: throw InvalidArgument("no two-term shift rule for gate " + gate_name(gates[k].kind));
    }
    const double base = gates[k].angle;
    gates[k].angle = base + shift;
    const double plus = evaluate();
    gates[k].angle = base - shift;
    const double minus = evaluate();
    gates[k].angle = base;
    grad[bindings[k]->param] += bindings[k]->scale * coeff * (plus - minus);
  }
  return grad;
}

std::vector<double> parameter_shift_gradient(const ParamCircuit& circuit, std::span<const double> params,
                                             const HeisenbergHamiltonian& h, const StateVector& init) {
  return parameter_shift_gradient(circuit, params, init,
                                  [&h](const StateVector& s) { return expectation(h, s); });
}

std::vector<double> parameter_shift_gradient(const ParamCircuit& circuit, std::span<const double> params,
                                             const HeisenbergHamiltonian& h, const StateVector& init,
                                             std::uint64_t shots, RngStream& rng) {
  return parameter_shift_gradient(circuit, params, init,
                                  [&](const StateVector& s) { return sampled_energy(h, s, shots, rng); });
}

}  // namespace sncqa
