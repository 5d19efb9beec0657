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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sncqa/statevector.hpp"

namespace sncqa {

/// Gate angle = scale * params[param].
struct ParamBinding {
  int param = 0;
  double scale = 1.0;
};

/// Ordered gate list where a parameter may drive several gates. Gates
/// without a binding keep their stored angle.
class ParamCircuit {
 public:
  explicit ParamCircuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  int param_count() const { return param_count_; }
  std::size_t size() const { return gates_.size(); }

  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::optional<ParamBinding>>& bindings() const { return bindings_; }

  /// Reserves a fresh parameter index.
  int new_parameter() { return param_count_++; }

  void add(const Gate& gate);
  void add(const Gate& gate, ParamBinding binding);
  void append(const ParamCircuit& other, int param_offset);

  /// Angles with the parameters substituted in.
  std::vector<Gate> bound_gates(std::span<const double> params) const;

  void apply(StateVector& state, std::span<const double> params) const;
  StateVector run(const StateVector& init, std::span<const double> params) const;

  /// One gate per line: `NAME q0 [q1] [p<k>[*scale]] [@angle]`, preceded by a
  /// `circuit <qubits> <params>` header.
  std::string to_text() const;
  static ParamCircuit from_text(const std::string& text);

  /// True when every parameter index is bound to at least one gate.
  bool all_parameters_bound() const;

 private:
  void check_params(std::span<const double> params) const;

  int num_qubits_;
  int param_count_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::optional<ParamBinding>> bindings_;
};

}  // namespace sncqa
