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

#include "sncqa/decompose.hpp"

#include <algorithm>
#include <numbers>
#include <vector>

#include "sncqa/error.hpp"

namespace sncqa {

const std::array<GateKind, 9>& primitive_gate_set() {
  static const std::array<GateKind, 9> kSet = {GateKind::I,  GateKind::RZ, GateKind::CNOT, GateKind::X,  GateKind::H,
                                               GateKind::RY, GateKind::CY, GateKind::CRY,  GateKind::SX};
  return kSet;
}

bool is_primitive(GateKind kind) {
  const auto& set = primitive_gate_set();
  return std::find(set.begin(), set.end(), kind) != set.end();
}

ParamCircuit decompose_to_primitives(const ParamCircuit& circuit) {
  ParamCircuit out(circuit.num_qubits());
  for (int k = 0; k < circuit.param_count(); ++k) out.new_parameter();
  const auto& gates = circuit.gates();
  const auto& bindings = circuit.bindings();
  const double half_pi = std::numbers::pi / 2.0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind != GateKind::ESwap) {
      if (!is_primitive(g.kind)) throw InvalidArgument("gate " + gate_name(g.kind) + " is outside the primitive set");
      if (bindings[i]) {
        out.add(g, *bindings[i]);
      } else {
        out.add(g);
      }
      continue;
    }
    const int a = g.q0, b = g.q1;
    out.add(Gate{GateKind::CNOT, a, b});
    Gate rz{GateKind::RZ, b, -1, g.angle};
    Gate cry{GateKind::CRY, b, a, 2.0 * g.angle};
    if (bindings[i]) {
      out.add(rz, *bindings[i]);
    } else {
      out.add(rz);
    }
    out.add(Gate{GateKind::RZ, a, -1, half_pi});
    if (bindings[i]) {
      out.add(cry, ParamBinding{bindings[i]->param, 2.0 * bindings[i]->scale});
    } else {
      out.add(cry);
    }
    out.add(Gate{GateKind::RZ, a, -1, -half_pi});
    out.add(Gate{GateKind::CNOT, a, b});
  }
  return out;
}

int circuit_depth(const ParamCircuit& circuit) {
  std::vector<int> level(circuit.num_qubits(), 0);
  int depth = 0;
  for (const auto& g : circuit.gates()) {
    int l = level[g.q0];
    if (is_two_qubit(g.kind)) l = std::max(l, level[g.q1]);
    ++l;
    level[g.q0] = l;
    if (is_two_qubit(g.kind)) level[g.q1] = l;
    depth = std::max(depth, l);
  }
  return depth;
}

ResourceCount count_resources(const ParamCircuit& circuit) {
  ResourceCount rc;
  for (const auto& g : circuit.gates()) {
    if (g.kind == GateKind::ESwap) ++rc.eswap_count;
  }
  const auto prim = decompose_to_primitives(circuit);
  for (auto k : primitive_gate_set()) rc.per_gate[k] = 0;
  for (const auto& g : prim.gates()) {
    ++rc.per_gate[g.kind];
    ++rc.total;
    if (is_two_qubit(g.kind)) ++rc.two_qubit;
  }
  rc.depth = circuit_depth(prim);
  return rc;
}

}  // namespace sncqa
