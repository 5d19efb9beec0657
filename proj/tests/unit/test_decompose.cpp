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

#include <gtest/gtest.h>

#include <numbers>

#include "oracle.hpp"
#include "sncqa/ansatz.hpp"
#include "sncqa/decompose.hpp"
#include "sncqa/error.hpp"
#include "sncqa/rng.hpp"

using namespace sncqa;

namespace {

double decomposition_error(int a, int b, double theta, int n) {
  ParamCircuit c(n);
  c.add(eswap(a, b, theta));
  const auto prim = decompose_to_primitives(c);
  for (const auto& g : prim.gates()) EXPECT_TRUE(is_primitive(g.kind));
  const auto u = oracle::circuit_unitary(prim.bound_gates(std::vector<double>{}), n);
  return oracle::phase_distance(u, oracle::eswap(a, b, theta, n));
}

}  // namespace

TEST(Decompose, PrimitiveSet) {
  EXPECT_EQ(primitive_gate_set().size(), 9u);
  for (auto k : {GateKind::I, GateKind::RZ, GateKind::CNOT, GateKind::X, GateKind::H, GateKind::RY, GateKind::CY,
                 GateKind::CRY, GateKind::SX}) {
    EXPECT_TRUE(is_primitive(k));
  }
  EXPECT_FALSE(is_primitive(GateKind::ESwap));
  EXPECT_FALSE(is_primitive(GateKind::RX));
}

TEST(Decompose, ExchangeGateMatchesUpToGlobalPhase) {
  RngStream rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const double t = rng.uniform(-2 * std::numbers::pi, 2 * std::numbers::pi);
    EXPECT_LE(decomposition_error(0, 1, t, 2), 1e-10) << t;
  }
  EXPECT_LE(decomposition_error(0, 1, 0.0, 2), 1e-10);
  EXPECT_LE(decomposition_error(0, 1, std::numbers::pi / 2, 2), 1e-10);
  EXPECT_LE(decomposition_error(1, 0, 0.4, 2), 1e-10);
  EXPECT_LE(decomposition_error(3, 1, -1.3, 4), 1e-10);
}

TEST(Decompose, WholeAnsatzMatchesUpToGlobalPhase) {
  const Lattice l(2, 2);
  AnsatzSpec spec;
  spec.layers = 2;
  const auto c = build_ansatz(l, spec, 1);
  const auto prim = decompose_to_primitives(c);
  EXPECT_EQ(prim.param_count(), c.param_count());
  RngStream rng(2);
  std::vector<double> p(c.param_count());
  for (auto& x : p) x = rng.uniform(-3, 3);
  const auto u1 = oracle::circuit_unitary(c.bound_gates(p), 4);
  const auto u2 = oracle::circuit_unitary(prim.bound_gates(p), 4);
  EXPECT_LE(oracle::phase_distance(u2, u1), 1e-10);
}

TEST(Decompose, RejectsGatesOutsideThePrimitiveSet) {
  ParamCircuit c(1);
  c.add(rotation(PauliAxis::X, 0, 0.2));
  EXPECT_THROW(decompose_to_primitives(c), InvalidArgument);
}

TEST(Decompose, ResourceFormulas) {
  for (auto [r, cols] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 4}}) {
    const Lattice l(r, cols);
    const int n = l.num_sites();
    for (int p : {1, 3}) {
      AnsatzSpec ph;
      ph.type = AnsatzType::PHEA;
      ph.layers = p;
      const auto rc = count_resources(build_ansatz(l, ph, 1));
      EXPECT_EQ(rc.per_gate.at(GateKind::CNOT), p * (n - 1));
      EXPECT_EQ(rc.per_gate.at(GateKind::RZ), 2 * p * n);
      EXPECT_EQ(rc.per_gate.at(GateKind::RY), p * n);
      EXPECT_EQ(rc.eswap_count, 0);

      AnsatzSpec sn;
      sn.layers = p;
      const auto circ = build_ansatz(l, sn, 1);
      const auto src = count_resources(circ);
      // Full YJM mixer: n(n-1)/2 transpositions plus n/2 matching gates per layer.
      EXPECT_EQ(src.eswap_count, p * (n * (n - 1) / 2 + n / 2));
      EXPECT_EQ(src.per_gate.at(GateKind::CNOT), 2 * src.eswap_count);
      EXPECT_EQ(src.per_gate.at(GateKind::CRY), src.eswap_count);
      EXPECT_EQ(src.two_qubit, 3 * src.eswap_count);
      EXPECT_EQ(src.total, 6 * src.eswap_count);
      EXPECT_GE(src.depth, 1);
      EXPECT_LE(src.depth, src.total);
    }
  }
}

TEST(Decompose, DepthIsGreedyLayering) {
  ParamCircuit c(3);
  c.add({GateKind::H, 0});
  c.add({GateKind::H, 1});
  c.add({GateKind::CNOT, 0, 1});
  c.add({GateKind::H, 2});
  c.add({GateKind::CNOT, 1, 2});
  EXPECT_EQ(circuit_depth(c), 3);
  EXPECT_EQ(circuit_depth(ParamCircuit(2)), 0);
}
