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

#include <fstream>
#include <sstream>

#include "oracle.hpp"
#include "sncqa/ansatz.hpp"
#include "sncqa/circuit.hpp"
#include "sncqa/error.hpp"

using namespace sncqa;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParamCircuit small_circuit() {
  ParamCircuit c(3);
  const int a = c.new_parameter();
  const int b = c.new_parameter();
  c.add({GateKind::H, 0});
  c.add(eswap(0, 1, 0), {a, 1.0});
  c.add(rotation(PauliAxis::Y, 2, 0), {b, -0.5});
  c.add({GateKind::CNOT, 2, 1});
  c.add(rotation(PauliAxis::Z, 1, 0.25));
  c.add({GateKind::CRY, 0, 2}, {a, 2.0});
  return c;
}

}  // namespace

TEST(Circuit, BindingSubstitutesScaledParameters) {
  const auto c = small_circuit();
  EXPECT_EQ(c.param_count(), 2);
  EXPECT_TRUE(c.all_parameters_bound());
  const std::vector<double> p{0.3, 0.8};
  const auto g = c.bound_gates(p);
  EXPECT_EQ(g[1].angle, 0.3);
  EXPECT_EQ(g[2].angle, -0.4);
  EXPECT_EQ(g[4].angle, 0.25);
  EXPECT_EQ(g[5].angle, 0.6);
}

TEST(Circuit, RunMatchesOracleUnitary) {
  const auto c = small_circuit();
  const std::vector<double> p{0.3, 0.8};
  const auto out = c.run(StateVector(3), p);
  const oracle::Vec expect = oracle::circuit_unitary(c.bound_gates(p), 3).col(0);
  for (std::size_t i = 0; i < out.dim(); ++i) EXPECT_LT(std::abs(out[i] - expect(i)), 1e-12);
}

TEST(Circuit, TextRoundTrip) {
  const auto c = small_circuit();
  const auto text = c.to_text();
  const auto back = ParamCircuit::from_text(text);
  EXPECT_EQ(back.to_text(), text);
  EXPECT_EQ(back.param_count(), c.param_count());
  const std::vector<double> p{-1.1, 0.45};
  const auto g1 = c.bound_gates(p);
  const auto g2 = back.bound_gates(p);
  ASSERT_EQ(g1.size(), g2.size());
  for (std::size_t i = 0; i < g1.size(); ++i) {
    EXPECT_EQ(g1[i].kind, g2[i].kind);
    EXPECT_EQ(g1[i].q0, g2[i].q0);
    EXPECT_EQ(g1[i].q1, g2[i].q1);
    EXPECT_EQ(g1[i].angle, g2[i].angle);
  }
}

TEST(Circuit, AnsatzTextRoundTrip) {
  for (auto type : {AnsatzType::SnCQA, AnsatzType::PHEA}) {
    AnsatzSpec spec;
    spec.type = type;
    spec.layers = 3;
    const auto c = build_ansatz(Lattice(2, 3), spec, 4);
    EXPECT_EQ(ParamCircuit::from_text(c.to_text()).to_text(), c.to_text());
  }
}

TEST(Circuit, GoldenSnCQA2x2) {
  AnsatzSpec spec;
  spec.layers = 1;
  const auto c = build_ansatz(Lattice(2, 2), spec, 1);
  const auto golden = read_file(std::string(SNCQA_GOLDEN_DIR) + "/sncqa_2x2_p1.txt");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(c.to_text(), golden);
}

TEST(Circuit, AppendOffsetsParameters) {
  ParamCircuit a(2), b(2);
  a.add(eswap(0, 1, 0), {a.new_parameter(), 1.0});
  b.add(rotation(PauliAxis::X, 1, 0), {b.new_parameter(), 1.0});
  a.append(b, a.new_parameter());
  EXPECT_EQ(a.param_count(), 2);
  EXPECT_EQ(a.bindings()[1]->param, 1);
  ParamCircuit wide(3);
  EXPECT_THROW(a.append(wide, 0), DimensionMismatch);
}

TEST(Circuit, RejectsBadBindingsAndText) {
  ParamCircuit c(2);
  EXPECT_THROW(c.add({GateKind::H, 0}, {0, 1.0}), InvalidArgument);
  const int p = c.new_parameter();
  EXPECT_THROW(c.add(eswap(0, 1, 0), {p + 1, 1.0}), InvalidArgument);
  c.add(eswap(0, 1, 0), {p, 1.0});
  EXPECT_THROW(c.bound_gates(std::vector<double>{}), DimensionMismatch);
  EXPECT_THROW(c.run(StateVector(3), std::vector<double>{0.1}), DimensionMismatch);
  EXPECT_THROW(ParamCircuit::from_text("H 0\n"), InvalidArgument);
  EXPECT_THROW(ParamCircuit::from_text("circuit 2 0\nFOO 0\n"), InvalidArgument);
  EXPECT_THROW(ParamCircuit::from_text("circuit 2 0\nCNOT 0 7\n"), InvalidArgument);
  EXPECT_THROW(ParamCircuit(0), InvalidArgument);
}

TEST(Circuit, UnboundParameterDetected) {
  ParamCircuit c(1);
  c.new_parameter();
  EXPECT_FALSE(c.all_parameters_bound());
}
