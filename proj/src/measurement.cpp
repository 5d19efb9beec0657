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

#include "sncqa/measurement.hpp"

#include <algorithm>
#include <bit>

#include "sncqa/error.hpp"

namespace sncqa {

StateVector rotate_to_measurement_basis(const StateVector& state, PauliAxis basis) {
  StateVector out = state;
  if (basis == PauliAxis::Z) return out;
  for (int q = 0; q < out.num_qubits(); ++q) {
    if (basis == PauliAxis::Y) apply_gate(out, Gate{GateKind::Sdg, q});
    apply_gate(out, Gate{GateKind::H, q});
  }
  return out;
}

std::vector<std::uint64_t> sample_histogram(const StateVector& state, PauliAxis basis, std::uint64_t shots,
                                            RngStream& rng) {
  if (shots < 1) throw InvalidArgument("need at least one shot");
  const auto rotated = rotate_to_measurement_basis(state, basis);
  const auto amps = rotated.amplitudes();
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    cdf[i] = acc;
  }
  std::vector<std::uint64_t> hist(amps.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx >= cdf.size()) idx = cdf.size() - 1;
    // Skip zero-probability entries that share a prefix value with the hit.
    while (idx > 0 && cdf[idx] == cdf[idx - 1] && std::norm(amps[idx]) == 0.0) --idx;
    ++hist[idx];
  }
  return hist;
}

Counts sample_bitstrings(const StateVector& state, PauliAxis basis, std::uint64_t shots, RngStream& rng) {
  const auto hist = sample_histogram(state, basis, shots, rng);
  Counts out;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    if (hist[i]) out.emplace(i, hist[i]);
  }
  return out;
}

double sampled_energy(const HeisenbergHamiltonian& h, const StateVector& state, std::uint64_t shots, RngStream& rng) {
  const auto terms = pauli_term_list(h);
  double estimate = 0.0;
  for (auto axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
    const auto hist = sample_histogram(state, axis, shots, rng);
    for (const auto& t : terms) {
      if (t.axis != axis) continue;
      const std::uint64_t mask = (std::uint64_t{1} << t.q0) | (std::uint64_t{1} << t.q1);
      std::int64_t signed_sum = 0;
      for (std::size_t i = 0; i < hist.size(); ++i) {
        if (!hist[i]) continue;
        const bool odd = std::popcount(i & mask) == 1;
        signed_sum += odd ? -static_cast<std::int64_t>(hist[i]) : static_cast<std::int64_t>(hist[i]);
      }
      estimate += t.coefficient * static_cast<double>(signed_sum) / static_cast<double>(shots);
    }
  }
  return estimate;
}

}  // namespace sncqa
