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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sncqa {

using Complex = std::complex<double>;

enum class PauliAxis : std::uint8_t { X, Y, Z };

char axis_name(PauliAxis axis);

/// Dense amplitude array over 2^n basis states. Bit k of a basis index is
/// qubit k (little-endian). Ket labels print qubit 0 leftmost.
class StateVector {
 public:
  /// |0...0>
  explicit StateVector(int num_qubits);

  static StateVector basis(int num_qubits, std::uint64_t index);
  static StateVector from_amplitudes(int num_qubits, std::vector<Complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  std::span<Complex> amplitudes() { return amps_; }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;
  void normalize();

  /// <this|other>
  Complex inner(const StateVector& other) const;

 private:
  int num_qubits_;
  std::vector<Complex> amps_;
};

/// Parses a ket label such as "0110" (qubit 0 first) into a basis index.
std::uint64_t basis_index(const std::string& ket);
std::string ket_label(std::uint64_t index, int num_qubits);

enum class GateKind : std::uint8_t {
  I,
  X,
  Z,
  H,
  S,
  Sdg,
  SX,
  RX,
  RY,
  RZ,
  CNOT,
  CY,
  CRY,
  ESwap,
};

std::string gate_name(GateKind kind);
/// Throws InvalidArgument for unknown names.
GateKind gate_kind_from_name(const std::string& name);

bool is_two_qubit(GateKind kind);
bool is_parameterized(GateKind kind);

/// Single gate instance. Rotations are exp(-i angle sigma / 2); the exchange
/// gate is exp(-i angle SWAP) = cos(angle) I - i sin(angle) SWAP. For
/// controlled gates q0 is the control.
struct Gate {
  GateKind kind = GateKind::I;
  int q0 = 0;
  int q1 = -1;
  double angle = 0.0;
};

Gate eswap(int i, int j, double theta);
Gate rotation(PauliAxis axis, int qubit, double theta);

void apply_gate(StateVector& state, const Gate& gate);
void apply_gate_inverse(StateVector& state, const Gate& gate);
void apply_eswap(StateVector& state, int i, int j, double theta);

/// Applies the Hermitian generator G of a parameterized gate, where the gate is
/// exp(-i angle G): SWAP for the exchange gate, sigma/2 for rotations, and
/// |1><1| (x) sigma_y/2 for CRY.
void apply_generator(StateVector& state, const Gate& gate);

/// Validates qubit indices against a register size.
void check_gate(const Gate& gate, int num_qubits);

}  // namespace sncqa
