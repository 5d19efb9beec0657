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

#include <array>
#include <map>

#include "sncqa/circuit.hpp"

namespace sncqa {

/// Target gate set for resource counting: I, RZ, CNOT, X, H, RY, CY, CRY, SX.
bool is_primitive(GateKind kind);
const std::array<GateKind, 9>& primitive_gate_set();

/// Replaces each exchange gate by
///   CNOT(a,b) RZ_b(t) RZ_a(pi/2) CRY_{b->a}(2t) RZ_a(-pi/2) CNOT(a,b),
/// equal to exp(-i t SWAP) up to a global phase. Parameter bindings carry
/// over with the matching scale. Throws for non-primitive gates.
ParamCircuit decompose_to_primitives(const ParamCircuit& circuit);

struct ResourceCount {
  std::map<GateKind, int> per_gate;  // every primitive present, zero if unused
  int eswap_count = 0;               // before decomposition
  int two_qubit = 0;
  int total = 0;
  int depth = 0;
};

/// Greedy-layered depth: each gate sits one layer above the latest gate on
/// any of its qubits.
int circuit_depth(const ParamCircuit& circuit);

/// Counts after decomposition to the primitive set.
ResourceCount count_resources(const ParamCircuit& circuit);

}  // namespace sncqa
