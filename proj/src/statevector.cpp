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

#include "sncqa/statevector.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "sncqa/error.hpp"

namespace sncqa {

namespace {

using Mat2 = std::array<Complex, 4>;  // row-major [a b; c d]

constexpr Complex kI{0.0, 1.0};

Mat2 dagger(const Mat2& m) { return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}; }

Mat2 single_qubit_matrix(GateKind kind, double angle) {
  const double s2 = std::numbers::sqrt2 / 2.0;
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  switch (kind) {
    case GateKind::I: return {1.0, 0.0, 0.0, 1.0};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::H: return {s2, s2, s2, -s2};
    case GateKind::S: return {1.0, 0.0, 0.0, kI};
    case GateKind::Sdg: return {1.0, 0.0, 0.0, -kI};
    case GateKind::SX: return {Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5)};
    case GateKind::RX: return {c, -kI * s, -kI * s, c};
    case GateKind::RY: return {c, -s, s, c};
    case GateKind::RZ: return {std::polar(1.0, -angle / 2.0), 0.0, 0.0, std::polar(1.0, angle / 2.0)};
    // Target operators of the controlled gates.
    case GateKind::CNOT: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::CY: return {0.0, -kI, kI, 0.0};
    case GateKind::CRY: return {c, -s, s, c};
    case GateKind::ESwap: break;
  }
  throw InvalidArgument("no 2x2 matrix for gate " + gate_name(kind));
}

void apply_1q(std::span<Complex> amps, int q, const Mat2& m) {
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps.size();
  if (m[1] == 0.0 && m[2] == 0.0) {
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t j = base; j < base + stride; ++j) {
        amps[j] *= m[0];
        amps[j + stride] *= m[3];
      }
    }
    return;
  }
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t j = base; j < base + stride; ++j) {
      const Complex a = amps[j];
      const Complex b = amps[j + stride];
      amps[j] = m[0] * a + m[1] * b;
      amps[j + stride] = m[2] * a + m[3] * b;
    }
  }
}

// Visits every index whose bits lo and hi are both clear.
template <class F>
void for_each_pair_base(std::size_t dim, int lo, int hi, F&& f) {
  if (lo > hi) std::swap(lo, hi);
  const std::size_t quarter = dim >> 2;
  const std::size_t lo_mask = (std::size_t{1} << lo) - 1;
  const std::size_t mid_mask = ((std::size_t{1} << (hi - 1)) - 1) & ~lo_mask;
  for (std::size_t k = 0; k < quarter; ++k) {
    std::size_t idx = (k & lo_mask) | ((k & mid_mask) << 1) | ((k & ~(lo_mask | mid_mask)) << 2);
    f(idx);
  }
}

void apply_controlled(std::span<Complex> amps, int control, int target, const Mat2& m) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for_each_pair_base(amps.size(), control, target, [&](std::size_t base) {
    const std::size_t i0 = base | cbit;
    const std::size_t i1 = i0 | tbit;
    const Complex a = amps[i0];
    const Complex b = amps[i1];
    amps[i0] = m[0] * a + m[1] * b;
    amps[i1] = m[2] * a + m[3] * b;
  });
}

void apply_exchange(std::span<Complex> amps, int i, int j, double theta) {
  const std::size_t ib = std::size_t{1} << i;
  const std::size_t jb = std::size_t{1} << j;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex phase = std::polar(1.0, -theta);
  const Complex off(0.0, -s);
  for_each_pair_base(amps.size(), i, j, [&](std::size_t base) {
    const std::size_t i01 = base | ib;
    const std::size_t i10 = base | jb;
    amps[base] *= phase;
    amps[base | ib | jb] *= phase;
    const Complex a = amps[i01];
    const Complex b = amps[i10];
    amps[i01] = c * a + off * b;
    amps[i10] = off * a + c * b;
  });
}

void apply_swap(std::span<Complex> amps, int i, int j) {
  const std::size_t ib = std::size_t{1} << i;
  const std::size_t jb = std::size_t{1} << j;
  for_each_pair_base(amps.size(), i, j, [&](std::size_t base) { std::swap(amps[base | ib], amps[base | jb]); });
}

}  // namespace

char axis_name(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  return '?';
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw InvalidArgument("state vector size out of range: " + std::to_string(num_qubits) + " qubits");
  }
  amps_.assign(std::size_t{1} << num_qubits, Complex{});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  StateVector out(num_qubits);
  if (index >= out.dim()) throw InvalidArgument("basis index out of range");
  out.amps_[0] = 0.0;
  out.amps_[index] = 1.0;
  return out;
}

StateVector StateVector::from_amplitudes(int num_qubits, std::vector<Complex> amplitudes) {
  StateVector out(num_qubits);
  if (amplitudes.size() != out.dim()) {
    throw DimensionMismatch("expected " + std::to_string(out.dim()) + " amplitudes, got " +
                            std::to_string(amplitudes.size()));
  }
  out.amps_ = std::move(amplitudes);
  return out;
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return acc;
}

void StateVector::normalize() {
  const double nrm = std::sqrt(norm_squared());
  if (nrm == 0.0) throw InvalidArgument("cannot normalize the zero vector");
  for (auto& a : amps_) a /= nrm;
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("inner product of states with different sizes");
  Complex acc{};
  for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
  return acc;
}

std::uint64_t basis_index(const std::string& ket) {
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < ket.size(); ++k) {
    if (ket[k] == '1') {
      idx |= std::uint64_t{1} << k;
    } else if (ket[k] != '0') {
      throw InvalidArgument("ket label must contain only 0 and 1: " + ket);
    }
  }
  return idx;
}

std::string ket_label(std::uint64_t index, int num_qubits) {
  std::string out(num_qubits, '0');
  for (int k = 0; k < num_qubits; ++k) {
    if ((index >> k) & 1U) out[k] = '1';
  }
  return out;
}

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::I: return "I";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::SX: return "SX";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CY: return "CY";
    case GateKind::CRY: return "CRY";
    case GateKind::ESwap: return "ESWAP";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  static constexpr GateKind kAll[] = {GateKind::I,  GateKind::X,  GateKind::Z,  GateKind::H,    GateKind::S,
                                      GateKind::Sdg, GateKind::SX, GateKind::RX, GateKind::RY,  GateKind::RZ,
                                      GateKind::CNOT, GateKind::CY, GateKind::CRY, GateKind::ESwap};
  for (auto k : kAll) {
    if (gate_name(k) == name) return k;
  }
  throw InvalidArgument("unknown gate name: " + name);
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CNOT || kind == GateKind::CY || kind == GateKind::CRY || kind == GateKind::ESwap;
}

bool is_parameterized(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ || kind == GateKind::CRY ||
         kind == GateKind::ESwap;
}

Gate eswap(int i, int j, double theta) { return Gate{GateKind::ESwap, i, j, theta}; }

Gate rotation(PauliAxis axis, int qubit, double theta) {
  GateKind kind = axis == PauliAxis::X ? GateKind::RX : axis == PauliAxis::Y ? GateKind::RY : GateKind::RZ;
  return Gate{kind, qubit, -1, theta};
}

void check_gate(const Gate& gate, int num_qubits) {
  if (gate.q0 < 0 || gate.q0 >= num_qubits) {
    throw InvalidArgument(gate_name(gate.kind) + ": qubit index " + std::to_string(gate.q0) + " out of range");
  }
  if (is_two_qubit(gate.kind)) {
    if (gate.q1 < 0 || gate.q1 >= num_qubits) {
      throw InvalidArgument(gate_name(gate.kind) + ": qubit index " + std::to_string(gate.q1) + " out of range");
    }
    if (gate.q0 == gate.q1) throw InvalidArgument(gate_name(gate.kind) + " needs two distinct qubits");
  }
}

void apply_eswap(StateVector& state, int i, int j, double theta) {
  apply_gate(state, eswap(i, j, theta));
}

void apply_gate(StateVector& state, const Gate& gate) {
  check_gate(gate, state.num_qubits());
  auto amps = state.amplitudes();
  switch (gate.kind) {
    case GateKind::I: return;
    case GateKind::ESwap: apply_exchange(amps, gate.q0, gate.q1, gate.angle); return;
    case GateKind::CNOT:
    case GateKind::CY:
    case GateKind::CRY: apply_controlled(amps, gate.q0, gate.q1, single_qubit_matrix(gate.kind, gate.angle)); return;
    default: apply_1q(amps, gate.q0, single_qubit_matrix(gate.kind, gate.angle)); return;
  }
}

void apply_gate_inverse(StateVector& state, const Gate& gate) {
  check_gate(gate, state.num_qubits());
  auto amps = state.amplitudes();
  switch (gate.kind) {
    case GateKind::I: return;
    case GateKind::ESwap: apply_exchange(amps, gate.q0, gate.q1, -gate.angle); return;
    case GateKind::CNOT:
    case GateKind::CY:
    case GateKind::CRY:
      apply_controlled(amps, gate.q0, gate.q1, dagger(single_qubit_matrix(gate.kind, gate.angle)));
      return;
    default: apply_1q(amps, gate.q0, dagger(single_qubit_matrix(gate.kind, gate.angle))); return;
  }
}

void apply_generator(StateVector& state, const Gate& gate) {
  check_gate(gate, state.num_qubits());
  auto amps = state.amplitudes();
  switch (gate.kind) {
    case GateKind::ESwap: apply_swap(amps, gate.q0, gate.q1); return;
    case GateKind::RX: apply_1q(amps, gate.q0, {0.0, 0.5, 0.5, 0.0}); return;
    case GateKind::RY: apply_1q(amps, gate.q0, {0.0, -0.5 * kI, 0.5 * kI, 0.0}); return;
    case GateKind::RZ: apply_1q(amps, gate.q0, {0.5, 0.0, 0.0, -0.5}); return;
    case GateKind::CRY: {
      // |1><1| on the control, sigma_y / 2 on the target; zero elsewhere.
      const std::size_t cbit = std::size_t{1} << gate.q0;
      for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cbit) == 0) amps[i] = 0.0;
      }
      apply_controlled(amps, gate.q0, gate.q1, {0.0, -0.5 * kI, 0.5 * kI, 0.0});
      return;
    }
    default: throw InvalidArgument("gate " + gate_name(gate.kind) + " has no continuous parameter");
  }
}

}  // namespace sncqa
