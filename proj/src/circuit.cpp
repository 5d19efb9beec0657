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

#include "sncqa/circuit.hpp"

#include <charconv>
#include <sstream>

#include "sncqa/error.hpp"
#include "sncqa/io.hpp"

namespace sncqa {

ParamCircuit::ParamCircuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) throw InvalidArgument("circuit needs at least one qubit");
}

void ParamCircuit::add(const Gate& gate) {
  check_gate(gate, num_qubits_);
  gates_.push_back(gate);
  bindings_.emplace_back(std::nullopt);
}

void ParamCircuit::add(const Gate& gate, ParamBinding binding) {
  check_gate(gate, num_qubits_);
  if (!is_parameterized(gate.kind)) throw InvalidArgument("cannot bind a parameter to " + gate_name(gate.kind));
  if (binding.param < 0 || binding.param >= param_count_) {
    throw InvalidArgument("parameter index " + std::to_string(binding.param) + " was never reserved");
  }
  gates_.push_back(gate);
  bindings_.emplace_back(binding);
}

void ParamCircuit::append(const ParamCircuit& other, int param_offset) {
  if (other.num_qubits_ != num_qubits_) throw DimensionMismatch("appending a circuit of a different width");
  for (std::size_t i = 0; i < other.gates_.size(); ++i) {
    if (other.bindings_[i]) {
      ParamBinding b = *other.bindings_[i];
      b.param += param_offset;
      while (param_count_ <= b.param) new_parameter();
      add(other.gates_[i], b);
    } else {
      add(other.gates_[i]);
    }
  }
}

void ParamCircuit::check_params(std::span<const double> params) const {
  if (params.size() != static_cast<std::size_t>(param_count_)) {
    throw DimensionMismatch("circuit has " + std::to_string(param_count_) + " parameters, got " +
                            std::to_string(params.size()));
  }
}

std::vector<Gate> ParamCircuit::bound_gates(std::span<const double> params) const {
  check_params(params);
  std::vector<Gate> out = gates_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (bindings_[i]) out[i].angle = bindings_[i]->scale * params[bindings_[i]->param];
  }
  return out;
}

void ParamCircuit::apply(StateVector& state, std::span<const double> params) const {
  if (state.num_qubits() != num_qubits_) throw DimensionMismatch("state width does not match circuit width");
  for (const auto& g : bound_gates(params)) apply_gate(state, g);
}

StateVector ParamCircuit::run(const StateVector& init, std::span<const double> params) const {
  StateVector out = init;
  apply(out, params);
  return out;
}

bool ParamCircuit::all_parameters_bound() const {
  std::vector<bool> seen(param_count_, false);
  for (const auto& b : bindings_) {
    if (b) seen[b->param] = true;
  }
  for (bool s : seen) {
    if (!s) return false;
  }
  return true;
}

std::string ParamCircuit::to_text() const {
  std::ostringstream os;
  os << "circuit " << num_qubits_ << ' ' << param_count_ << '\n';
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const auto& g = gates_[i];
    os << gate_name(g.kind) << ' ' << g.q0;
    if (is_two_qubit(g.kind)) os << ' ' << g.q1;
    if (bindings_[i]) {
      os << " p" << bindings_[i]->param;
      if (bindings_[i]->scale != 1.0) os << '*' << format_double(bindings_[i]->scale);
    } else if (is_parameterized(g.kind)) {
      os << " @" << format_double(g.angle);
    }
    os << '\n';
  }
  return os.str();
}

ParamCircuit ParamCircuit::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  int nq = 0, np = 0;
  if (!(is >> tag >> nq >> np) || tag != "circuit") throw InvalidArgument("circuit text must start with a header");
  ParamCircuit c(nq);
  for (int k = 0; k < np; ++k) c.new_parameter();
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string name;
    ls >> name;
    Gate g;
    g.kind = gate_kind_from_name(name);
    ls >> g.q0;
    if (is_two_qubit(g.kind)) ls >> g.q1;
    if (!ls) throw InvalidArgument("malformed gate line: " + line);
    std::string extra;
    if (ls >> extra) {
      if (extra[0] == 'p') {
        ParamBinding b;
        auto star = extra.find('*');
        b.param = std::stoi(extra.substr(1, star == std::string::npos ? std::string::npos : star - 1));
        if (star != std::string::npos) b.scale = parse_double(extra.substr(star + 1));
        c.add(g, b);
        continue;
      }
      if (extra[0] == '@') {
        g.angle = parse_double(extra.substr(1));
      } else {
        throw InvalidArgument("malformed gate argument: " + extra);
      }
    }
    c.add(g);
  }
  return c;
}

}  // namespace sncqa
